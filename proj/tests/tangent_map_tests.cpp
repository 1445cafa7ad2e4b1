#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "coaxal/errors.hpp"
#include "coaxal/tangent_map.hpp"

using namespace coaxal;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

Pencil pencil_k(double k) { return Pencil::from_modulus(Modulus::from_k(k)); }

// Independent construction of the chords through z1 tangent to a circle:
// swing the two tangent directions from z1 and intersect them with T again.
std::array<CirclePoint, 2> tangent_chord_endpoints(CirclePoint z1,
                                                   const OrientedCircle& c) {
  std::complex<double> p = z1.z();
  double dx = c.center.x - p.real();
  double dy = c.center.y - p.imag();
  double dist = std::hypot(dx, dy);
  double beta = std::atan2(dy, dx);
  double phi = std::asin(std::min(1.0, c.radius / dist));
  std::array<CirclePoint, 2> out{CirclePoint(0.0), CirclePoint(0.0)};
  int idx = 0;
  for (double dir : {beta + phi, beta - phi}) {
    double ex = std::cos(dir), ey = std::sin(dir);
    double t = -2.0 * (p.real() * ex + p.imag() * ey);
    std::complex<double> z2{p.real() + t * ex, p.imag() + t * ey};
    out[static_cast<std::size_t>(idx++)] = CirclePoint(std::arg(z2) / 2.0);
  }
  return out;
}

}  // namespace

TEST_CASE("circle points normalize their representative") {
  CHECK(CirclePoint(0.3).theta() == doctest::Approx(0.3));
  CHECK(CirclePoint(0.3 + kPi).theta() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(CirclePoint(-kHalfPi).theta() == doctest::Approx(kHalfPi));
  CHECK(CirclePoint(kHalfPi).theta() == doctest::Approx(kHalfPi));
  CHECK(point_gap(CirclePoint(0.2), CirclePoint(0.2 - 5 * kPi)) <= 1e-13);
  CHECK_THROWS_AS(CirclePoint(std::nan("")), InvalidArgument);
}

TEST_CASE("identity and involution maps") {
  Pencil p = pencil_k(0.8);
  CirclePoint z(0.47);

  TangentMap id = TangentMap::from_alpha(p, 0.0);
  CHECK(point_gap(apply(id, z), z) <= 1e-15);

  TangentMap half = TangentMap::from_alpha(p, kHalfPi);
  CHECK(point_gap(apply(half, apply(half, z)), z) <= 1e-12);
  CHECK(half.a() == doctest::Approx(p.K()));
}

TEST_CASE("apply composes the elliptic kernel") {
  Pencil p = pencil_k(0.8);
  const Modulus& m = p.modulus();
  TangentMap f = TangentMap::from_alpha(p, 0.3);
  CirclePoint out = apply(f, CirclePoint(0.5));
  double want = amplitude(incomplete_f(0.5, m) + incomplete_f(0.3, m), m);
  CHECK(out.theta() == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("apply is well defined on representatives") {
  Pencil p = pencil_k(0.65);
  TangentMap f = TangentMap::from_alpha(p, 0.9);
  for (double theta : {-1.3, -0.2, 0.4, 1.5, kHalfPi}) {
    CirclePoint a = apply(f, CirclePoint(theta));
    CirclePoint b = apply(f, CirclePoint(theta + kPi));
    CHECK(std::fabs(a.theta() - b.theta()) <= 1e-12);
  }
}

TEST_CASE("composition closed form") {
  Pencil p = pencil_k(0.5);
  TangentMap f = TangentMap::from_alpha(p, 0.7);
  TangentMap g = TangentMap::from_alpha(p, -0.4);

  TangentMap inv = compose(f, TangentMap::from_alpha(p, -0.7));
  CHECK(inv.a() == doctest::Approx(0.0));
  CHECK_FALSE(inv.conjugated());

  // Pointwise agreement with sequential application.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  TangentMap fg = compose(f, g);
  for (int i = 0; i < 100; ++i) {
    CirclePoint z(th(rng));
    CHECK(point_gap(apply(fg, z), apply(f, apply(g, z))) <= 1e-9);
  }

  CHECK_THROWS_AS(compose(f, TangentMap::from_alpha(pencil_k(0.6), 0.1)),
                  PencilMismatch);
}

TEST_CASE("conjugated maps extend the group") {
  Pencil p = pencil_k(0.5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  std::uniform_real_distribution<double> al(-kHalfPi + 0.01, kHalfPi);

  for (int i = 0; i < 50; ++i) {
    double alpha = al(rng), beta = al(rng);
    TangentMap psi = TangentMap::from_alpha(p, alpha);
    TangentMap bar_beta = TangentMap::from_alpha(p, beta, true);

    // Involution.
    TangentMap bb = compose(bar_beta, bar_beta);
    CHECK_FALSE(bb.conjugated());
    CHECK(std::fabs(bb.a()) <= 1e-12);

    // Conjugating psi_alpha by any conjugated element inverts it.
    TangentMap conjugated = compose(bar_beta, compose(psi, bar_beta));
    CHECK_FALSE(conjugated.conjugated());
    CHECK(conjugated.a() ==
          doctest::Approx(p.normalize(-psi.a())).epsilon(1e-12));

    CirclePoint z(th(rng));
    CHECK(point_gap(apply(bar_beta, apply(bar_beta, z)), z) <= 1e-10);
    CirclePoint lhs = apply(bar_beta, apply(psi, apply(bar_beta, z)));
    CHECK(point_gap(lhs, apply(TangentMap::from_alpha(p, -alpha), z)) <= 1e-9);
  }
}

TEST_CASE("chord distance formula") {
  // Diameter through the origin.
  CHECK(chord_distance(CirclePoint(0.0), CirclePoint(kHalfPi), 0.0) <= 1e-15);
  // Vertical chord through x = 0 seen from (x, 0).
  CHECK(chord_distance(CirclePoint(kPi / 4), CirclePoint(-kPi / 4), 0.37) ==
        doctest::Approx(0.37).epsilon(1e-14));
  // z = 1 and z = i from the origin.
  CHECK(chord_distance(CirclePoint(0.0), CirclePoint(kPi / 4), 0.0) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));

  CHECK_THROWS_AS(chord_distance(CirclePoint(0.2), CirclePoint(0.2), 0.0),
                  InvalidArgument);
  CHECK_THROWS_AS(
      chord_distance(CirclePoint(0.2), CirclePoint(0.2 + kPi), 0.0),
      InvalidArgument);
}

TEST_CASE("tangency of forward chords") {
  Pencil p = pencil_k(0.6);
  TangentMap f = TangentMap::from_alpha(p, 0.5);
  TangencyReport rep = tangency_check(f, CirclePoint(0.2), 1e-9);
  CHECK(rep.distance_error <= 1e-9);
  CHECK(rep.side == ChordSide::right);
  CHECK(rep.tangent);

  // Reversing the chord puts the center on the other side.
  CirclePoint z(0.2);
  CirclePoint z2 = apply(f, z);
  OrientedCircle c = f.tangency_circle();
  CHECK(chord_side(z, z2, c.center) == ChordSide::right);
  CHECK(chord_side(z2, z, c.center) == ChordSide::left);

  // alpha = pi/2: the chord runs through the limit point.
  TangentMap half = TangentMap::from_alpha(p, kHalfPi);
  for (double theta : {-1.2, -0.4, 0.0, 0.3, 1.0}) {
    CirclePoint w(theta);
    CHECK(chord_distance(w, apply(half, w), p.limit_point()) <= 1e-9);
    CHECK(tangency_check(half, w, 1e-9).tangent);
  }

  CHECK_THROWS_AS(tangency_check(TangentMap::from_alpha(p, 0.0), z, 1e-9),
                  InvalidArgument);
  CHECK_THROWS_AS(tangency_check(TangentMap::from_alpha(p, -0.4), z, 1e-9),
                  InvalidArgument);
  CHECK_THROWS_AS(tangency_check(TangentMap::from_alpha(p, 0.4, true), z, 1e-9),
                  InvalidArgument);
}

TEST_CASE("forward maps are the right-tangent chord construction") {
  Pencil p = pencil_k(0.7);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> al(0.05, kHalfPi - 0.05);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  for (int i = 0; i < 200; ++i) {
    TangentMap f = TangentMap::from_alpha(p, al(rng));
    CirclePoint z1(th(rng));
    auto candidates = tangent_chord_endpoints(z1, f.tangency_circle());
    int right_count = 0;
    CirclePoint winner = candidates[0];
    for (const CirclePoint& z2 : candidates) {
      if (chord_side(z1, z2, f.tangency_circle().center) == ChordSide::right) {
        ++right_count;
        winner = z2;
      }
    }
    CHECK(right_count == 1);
    CHECK(point_gap(winner, apply(f, z1)) <= 1e-9);
  }
}

TEST_CASE("tangency parameters compose like the pencil group") {
  Pencil p = pencil_k(0.55);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> al(-kHalfPi + 1e-3, kHalfPi);
  for (int i = 0; i < 200; ++i) {
    double alpha = al(rng), beta = al(rng);
    TangentMap f = TangentMap::from_alpha(p, alpha);
    TangentMap g = TangentMap::from_alpha(p, beta);
    TangentMap fg = compose(f, g);
    PencilParameter via_circle = parameter_of(p, fg.tangency_circle());
    PencilParameter via_group = group_op(p, {f.a()}, {g.a()});
    double diff = std::fabs(p.normalize(via_circle.a - via_group.a));
    CHECK((diff <= 1e-9 || std::fabs(diff - p.K()) <= 1e-9));
  }
}

TEST_CASE("conjugate tangency circle") {
  Pencil p = pencil_k(0.7);

  // a -> K collapses onto the second limit point 1/L.
  OrientedCircle at_k = conjugate_tangency_circle(p, {p.K()});
  CHECK(at_k.center.x == doctest::Approx(1.0 / p.limit_point()).epsilon(1e-12));
  CHECK(at_k.radius <= 1e-7);
  CHECK(at_k.center.x < p.radical_axis_x());

  PencilParameter a{0.5 * p.K()};
  OrientedCircle c = conjugate_tangency_circle(p, a);
  TangentMap bar = TangentMap::from_parameter(p, a, true);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  for (int i = 0; i < 50; ++i) {
    CirclePoint z1(th(rng));
    CirclePoint z2 = apply(bar, z1);
    CHECK(std::fabs(chord_distance(z1, z2, c.center.x) - c.radius) <= 1e-9);
  }

  CHECK_THROWS_AS(conjugate_tangency_circle(p, {0.0}), InvalidArgument);
}

TEST_CASE("tangent-pencil maps") {
  CirclePoint z(0.1);
  CHECK(point_gap(a1_apply(0.0, z), z) <= 1e-15);

  // The tangency point of the pencil is fixed.
  CHECK(a1_apply(0.4, CirclePoint(kHalfPi)).theta() ==
        doctest::Approx(kHalfPi));

  // Both defining equations hold at the output.
  double alpha = 0.3, theta = 0.1;
  double out = a1_apply(alpha, CirclePoint(theta)).theta();
  double den = 1 + std::sin(alpha) * std::sin(theta);
  CHECK(std::fabs(std::cos(out) - std::cos(alpha) * std::cos(theta) / den) <=
        1e-12);
  CHECK(std::fabs(std::sin(out) - (std::sin(alpha) + std::sin(theta)) / den) <=
        1e-12);
  CHECK(std::cos(out) >= 0.0);

  CHECK_THROWS_AS(a1_apply(kHalfPi, z), InvalidArgument);
  CHECK_THROWS_AS(a1_apply(-2.0, z), InvalidArgument);
}

TEST_CASE("tangent-pencil composition") {
  CHECK(std::fabs(a1_compose(0.37, -0.37)) <= 1e-15);
  CHECK(a1_compose(0.37, 0.0) == doctest::Approx(0.37).epsilon(1e-15));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  double gamma = a1_compose(0.4, 0.2);
  for (int i = 0; i < 100; ++i) {
    CirclePoint z(th(rng));
    CHECK(point_gap(a1_apply(gamma, z), a1_apply(0.4, a1_apply(0.2, z))) <=
          1e-10);
  }
}

TEST_CASE("tangent-pencil circle") {
  OrientedCircle nearly_t = a1_circle(1e-8);
  CHECK(std::fabs(nearly_t.center.x) <= 1e-15);
  CHECK(nearly_t.radius == doctest::Approx(1.0));

  // Internal tangency to T at (-1, 0) is an algebraic identity.
  for (double alpha : {0.2, 0.6, 1.2, 1.5}) {
    OrientedCircle c = a1_circle(alpha);
    CHECK(c.center.x - c.radius == -1.0);
  }

  OrientedCircle c = a1_circle(0.6);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> th(-kHalfPi, kHalfPi);
  for (int i = 0; i < 100; ++i) {
    CirclePoint z(th(rng));
    CirclePoint z2 = a1_apply(0.6, z);
    CHECK(std::fabs(chord_distance(z, z2, c.center.x) - c.radius) <= 1e-9);
    CHECK(chord_side(z, z2, c.center) == ChordSide::right);
  }

  // Converse: the unique right-tangent chord from z ends at a1_apply(z).
  for (int i = 0; i < 100; ++i) {
    CirclePoint z1(th(rng));
    auto candidates = tangent_chord_endpoints(z1, c);
    for (const CirclePoint& z2 : candidates) {
      if (chord_side(z1, z2, c.center) == ChordSide::right) {
        CHECK(point_gap(z2, a1_apply(0.6, z1)) <= 1e-9);
      }
    }
  }

  CHECK_THROWS_AS(a1_circle(0.0), InvalidArgument);
  CHECK_THROWS_AS(a1_circle(kHalfPi), InvalidArgument);
}
