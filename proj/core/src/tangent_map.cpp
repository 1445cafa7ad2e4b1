#include "coaxal/tangent_map.hpp"

#include <cmath>
#include <numbers>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

double reduce_theta(double theta) {
  double t = std::remainder(theta, kPi);
  if (t <= -kHalfPi) t += kPi;
  return t;
}

}  // namespace

CirclePoint::CirclePoint(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
  theta_ = reduce_theta(theta);
}

std::complex<double> CirclePoint::z() const {
  return {std::cos(2.0 * theta_), std::sin(2.0 * theta_)};
}

TangentMap TangentMap::from_alpha(const Pencil& p, double alpha,
                                  bool conjugated) {
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  double al = reduce_theta(alpha);
  double a = p.normalize(incomplete_f(al, p.modulus()));
  return TangentMap(p, al, a, conjugated);
}

TangentMap TangentMap::from_parameter(const Pencil& p, PencilParameter par,
                                      bool conjugated) {
  double a = p.normalize(par.a);
  double alpha = amplitude(a, p.modulus());
  return TangentMap(p, alpha, a, conjugated);
}

OrientedCircle TangentMap::tangency_circle() const {
  return circle_at(pencil_, {a_});
}

CirclePoint apply(const TangentMap& f, CirclePoint z) {
  const Modulus& m = f.pencil().modulus();
  double u = incomplete_f(z.theta(), m);
  double theta_out = amplitude(u + f.a(), m);
  if (f.conjugated()) theta_out = -theta_out;
  return CirclePoint(theta_out);
}

TangentMap compose(const TangentMap& f, const TangentMap& g) {
  if (!f.pencil().same_as(g.pencil())) {
    throw PencilMismatch("cannot compose maps from different pencils");
  }
  // On the u-line a plain map is u -> u + a and a conjugated one u -> -u - a;
  // composing and reducing mod 2K covers all four cases.
  double c = g.conjugated() ? g.a() - f.a() : f.a() + g.a();
  bool conj = f.conjugated() != g.conjugated();
  return TangentMap::from_parameter(f.pencil(), {c}, conj);
}

double chord_distance(CirclePoint z1, CirclePoint z2, double x3) {
  if (std::fabs(std::remainder(z1.theta() - z2.theta(), kPi)) <= 1e-12) {
    throw InvalidArgument("chord undefined: the two points coincide");
  }
  std::complex<double> a = z1.z();
  std::complex<double> b = z2.z();
  return 0.5 * std::abs(x3 * (1.0 + a * b) - (a + b));
}

ChordSide chord_side(CirclePoint z1, CirclePoint z2, const Point& p) {
  std::complex<double> a = z1.z();
  std::complex<double> b = z2.z();
  // Clockwise-positive cross product: a chord running counterclockwise past
  // the circle (the forward maps with alpha > 0) keeps the center at
  // negative cross, the segment on the circle's right.
  double cross = (b.imag() - a.imag()) * (p.x - a.real()) -
                 (b.real() - a.real()) * (p.y - a.imag());
  return cross < 0.0 ? ChordSide::right : ChordSide::left;
}

TangencyReport tangency_check(const TangentMap& f, CirclePoint z, double tol) {
  if (f.conjugated()) {
    throw InvalidArgument("tangency_check takes a plain (non-conjugated) map");
  }
  if (f.alpha() == 0.0) {
    throw InvalidArgument("alpha = 0: the chord degenerates to a point");
  }
  if (f.alpha() < 0.0) {
    throw InvalidArgument("tangency_check needs alpha in (0, pi/2]");
  }
  CirclePoint z2 = apply(f, z);
  OrientedCircle c = f.tangency_circle();
  double err = std::fabs(chord_distance(z, z2, c.center.x) - c.radius);
  ChordSide side = chord_side(z, z2, c.center);
  bool tangent =
      err <= tol && (c.radius <= tol || side == ChordSide::right);
  return {err, side, tangent};
}

OrientedCircle conjugate_tangency_circle(const Pencil& p, PencilParameter par) {
  double a = p.normalize(par.a);
  if (a == 0.0) {
    throw InvalidArgument(
        "a = 0: dn a = 1 makes the conjugate circle formula singular");
  }
  JacobiTriple j = jacobi(a, p.modulus());
  double cn = std::fabs(j.cn);
  Orientation o = a > 0.0 ? Orientation::positive : Orientation::negative;
  return {{(j.dn + 1.0) / (j.dn - 1.0), 0.0}, 2.0 * cn / (1.0 - j.dn), o};
}

CirclePoint a1_apply(double alpha, CirclePoint z) {
  if (!std::isfinite(alpha) || std::fabs(alpha) >= kHalfPi) {
    throw InvalidArgument("A_1 maps need alpha in (-pi/2, pi/2)");
  }
  double sa = std::sin(alpha), ca = std::cos(alpha);
  double st = std::sin(z.theta()), ct = std::cos(z.theta());
  double den = 1.0 + sa * st;  // > 0 on the whole domain
  return CirclePoint(std::atan2((sa + st) / den, ca * ct / den));
}

double a1_compose(double alpha, double beta) {
  if (!std::isfinite(alpha) || std::fabs(alpha) >= kHalfPi ||
      !std::isfinite(beta) || std::fabs(beta) >= kHalfPi) {
    throw InvalidArgument("A_1 maps need parameters in (-pi/2, pi/2)");
  }
  double sa = std::sin(alpha), ca = std::cos(alpha);
  double sb = std::sin(beta), cb = std::cos(beta);
  double den = 1.0 + sa * sb;
  return std::atan2((sa + sb) / den, ca * cb / den);
}

OrientedCircle a1_circle(double alpha) {
  if (!(alpha > 0.0 && alpha < kHalfPi)) {
    throw InvalidArgument("a1_circle needs alpha in (0, pi/2)");
  }
  double c = std::cos(alpha);
  return {{(c - 1.0) / (c + 1.0), 0.0}, 2.0 * c / (c + 1.0),
          Orientation::positive};
}

}  // namespace coaxal
