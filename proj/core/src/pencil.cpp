#include "coaxal/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kBoundarySnap = 1e-12;   // -K snaps to K
constexpr double kMembershipTol = 1e-8;   // dn^2 + k^2 sn^2 = 1 slack
constexpr double kDegenerateTol = 1e-12;  // tangency/concentricity detection

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

Pencil Pencil::from_limit_point(double limit_point) {
  if (!std::isfinite(limit_point) || limit_point <= -1.0 || limit_point >= 0.0) {
    throw InvalidArgument(
        "limit point must lie in (-1, 0): not an interior limit point of a "
        "hyperbolic pencil");
  }
  double k_comp = (1.0 + limit_point) / (1.0 - limit_point);
  return from_modulus(Modulus::from_complement(k_comp));
}

Pencil Pencil::from_modulus(const Modulus& m) {
  if (m.k() >= 1.0) {
    throw InvalidArgument("k = 1 names the tangent pencil; use the a1_* maps");
  }
  QuarterPeriod K = quarter_period(m);
  double L = (m.k_comp() - 1.0) / (m.k_comp() + 1.0);
  double axis = L == 0.0 ? -std::numeric_limits<double>::infinity()
                         : (L * L + 1.0) / (2.0 * L);
  return Pencil(m, K, L, axis);
}

Pencil Pencil::from_parts(const Modulus& m, QuarterPeriod K, double limit_point,
                          double radical_axis_x) {
  return Pencil(m, K, limit_point, radical_axis_x);
}

double Pencil::normalize(double a) const {
  double r = std::remainder(a, 2.0 * K_.K);
  if (r <= -K_.K + kBoundarySnap) r = K_.K;
  return r;
}

bool Pencil::same_as(const Pencil& other) const {
  return std::fabs(m_.k() - other.m_.k()) <= 1e-12;
}

Point SimilarityTransform::apply(const Point& z) const {
  double c = std::cos(rotation), s = std::sin(rotation);
  return {scale * (c * z.x - s * z.y) + translation.x,
          scale * (s * z.x + c * z.y) + translation.y};
}

Point SimilarityTransform::invert(const Point& w) const {
  double c = std::cos(rotation), s = std::sin(rotation);
  double ux = (w.x - translation.x) / scale;
  double uy = (w.y - translation.y) / scale;
  return {c * ux + s * uy, -s * ux + c * uy};
}

OrientedCircle SimilarityTransform::apply(const OrientedCircle& c) const {
  return {apply(c.center), scale * c.radius, c.orientation};
}

OrientedCircle SimilarityTransform::invert(const OrientedCircle& c) const {
  return {invert(c.center), c.radius / scale, c.orientation};
}

OrientedCircle circle_at(const Pencil& p, PencilParameter par) {
  double a = p.normalize(par.a);
  JacobiTriple j = jacobi(a, p.modulus());
  // cn a >= 0 on (-K, K]; the |.| only matters at the snapped boundary.
  double cn = std::fabs(j.cn);
  Orientation o = a > 0.0   ? Orientation::positive
                  : a < 0.0 ? Orientation::negative
                            : Orientation::unoriented;
  return {{(j.dn - 1.0) / (j.dn + 1.0), 0.0}, 2.0 * cn / (1.0 + j.dn), o};
}

PencilParameter parameter_of(const Pencil& p, const OrientedCircle& c) {
  if (!(std::fabs(c.center.y) <= 1e-9)) {
    throw NotInPencil("circle center is off the pencil's line of centers");
  }
  const Modulus& m = p.modulus();
  if (p.concentric()) {
    // Rotation pencil: members are concentric, radius = cos a.
    if (!(std::fabs(c.center.x) <= 1e-9) || c.radius > 1.0 + 1e-9) {
      throw NotInPencil("not a member of the concentric (k = 0) pencil");
    }
    double a = std::acos(clamp01(c.radius));
    if (c.orientation == Orientation::negative) a = -a;
    return {p.normalize(a)};
  }
  double x = c.center.x;
  if (!(std::fabs(x) < 1.0)) throw NotInPencil("center outside the unit disk");
  double dn = (1.0 + x) / (1.0 - x);
  if (dn > 1.0 + 1e-10 || dn < m.k_comp() - kMembershipTol) {
    throw NotInPencil("recovered dn outside [k', 1]");
  }
  dn = std::clamp(dn, m.k_comp(), 1.0);
  // Cross-check the stated radius against the center: both must name the
  // same Jacobi triple.
  double cn_from_radius = c.radius * (1.0 + dn) / 2.0;
  double sn2_from_radius = 1.0 - cn_from_radius * cn_from_radius;
  if (std::fabs(dn * dn + m.k2() * sn2_from_radius - 1.0) > kMembershipTol) {
    throw NotInPencil("center and radius are inconsistent for this pencil");
  }
  double sn2 = clamp01((1.0 - dn) * (1.0 + dn) / m.k2());
  double a = incomplete_f(std::asin(std::sqrt(sn2)), m);
  if (c.orientation == Orientation::negative) a = -a;
  return {p.normalize(a)};
}

PencilParameter group_op(const Pencil& p, PencilParameter a, PencilParameter b) {
  return {p.normalize(a.a + b.a)};
}

namespace {

std::optional<ElementOrder> order_by_scan(double a, double two_k, int n_max,
                                          double tol) {
  for (int n = 1; n <= n_max; ++n) {
    double d = std::fabs(std::remainder(n * a, two_k));
    if (d <= tol) {
      return ElementOrder{n, static_cast<int>(std::llround(n * a / two_k))};
    }
  }
  return std::nullopt;
}

// Smallest q <= n_max with dist(q*x, Z) <= eps is always a continued-fraction
// convergent denominator of x (best approximation of the second kind).
std::optional<ElementOrder> order_by_convergents(double a, double two_k,
                                                 int n_max, double tol) {
  double x = std::fabs(a / two_k);
  std::int64_t q_prev = 0, q_cur = 1;
  double y = x;
  for (int it = 0; it < 64; ++it) {
    if (q_cur > n_max) break;
    double d = std::fabs(std::remainder(q_cur * a, two_k));
    if (d <= tol) {
      int n = static_cast<int>(q_cur);
      return ElementOrder{n, static_cast<int>(std::llround(n * a / two_k))};
    }
    double frac = y - std::floor(y);
    if (frac <= std::numeric_limits<double>::epsilon()) break;
    y = 1.0 / frac;
    std::int64_t term = static_cast<std::int64_t>(std::floor(y));
    std::int64_t q_next = term * q_cur + q_prev;
    if (q_next <= q_cur) break;  // overflow guard
    q_prev = q_cur;
    q_cur = q_next;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ElementOrder> order_of(const Pencil& p, PencilParameter par,
                                     int n_max, double tol) {
  if (n_max < 1) throw InvalidArgument("order_of needs n_max >= 1");
  if (!(tol >= 0.0)) throw InvalidArgument("order_of needs tol >= 0");
  double a = p.normalize(par.a);
  double two_k = 2.0 * p.K();
  if (n_max <= 1000) return order_by_scan(a, two_k, n_max, tol);
  return order_by_convergents(a, two_k, n_max, tol);
}

PencilParameter parameter_of_order(const Pencil& p, int n, int h) {
  bool ok = (n == 2 && h == 1) ||
            (n >= 3 && h >= 1 && 2 * h < n && std::gcd(h, n) == 1);
  if (!ok) {
    throw InvalidArgument(
        "order pair (n, h) requires n = 2, h = 1 or n >= 3 with gcd(h, n) = 1 "
        "and 2h < n");
  }
  return {p.normalize(2.0 * h * p.K() / n)};
}

CanonicalFrame canonical_frame(const OrientedCircle& outer,
                               const OrientedCircle& inner) {
  if (!(outer.radius > 0.0) || !std::isfinite(outer.radius)) {
    throw InvalidArgument("outer circle must have positive radius");
  }
  if (!(inner.radius >= 0.0) || !std::isfinite(inner.radius)) {
    throw InvalidArgument("inner circle must have nonnegative radius");
  }
  // Work in units of the outer radius.
  double dx = inner.center.x - outer.center.x;
  double dy = inner.center.y - outer.center.y;
  double d = std::hypot(dx, dy) / outer.radius;
  double r = inner.radius / outer.radius;
  if (d <= kDegenerateTol) {
    throw ConcentricPencil(
        "concentric circles: the group degenerates to rotations (k = 0)");
  }
  if (std::fabs(d + r - 1.0) <= kDegenerateTol ||
      std::fabs(d - r - 1.0) <= kDegenerateTol ||
      std::fabs(r - d - 1.0) <= kDegenerateTol) {
    throw TangentPencil("tangent circles: use the tangent-pencil (A_1) maps");
  }
  if (d + r > 1.0) {
    if (d < 1.0 + r && d > std::fabs(1.0 - r)) {
      throw IntersectingCircles("circles intersect: no hyperbolic pencil");
    }
    throw InvalidArgument("inner circle must lie strictly inside the outer");
  }

  // Rotate the inner center onto the negative real axis.
  double rot = std::remainder(kPi - std::atan2(dy, dx), 2.0 * kPi);
  SimilarityTransform t;
  t.rotation = rot;
  t.scale = 1.0 / outer.radius;
  t.translation = {0.0, 0.0};
  Point shifted = t.apply(outer.center);
  t.translation = {-shifted.x, -shifted.y};

  // Radical axis abscissa and the limit-point root inside T. The second root
  // x_r - sqrt(x_r^2 - 1) = 1/L lies outside.
  double xr = -(d * d - r * r + 1.0) / (2.0 * d);
  double L = xr + std::sqrt(xr * xr - 1.0);
  Pencil pencil = Pencil::from_limit_point(L);
  OrientedCircle inner_canonical = t.apply(inner);
  PencilParameter a = parameter_of(pencil, inner_canonical);
  return {t, pencil, a};
}

}  // namespace coaxal
