#pragma once

#include <complex>

#include "coaxal/pencil.hpp"

namespace coaxal {

// A point z = e^{2 i theta} on the unit circle, stored by the representative
// theta in (-pi/2, pi/2]. Representatives differing by pi name the same
// point, so the constructor reduces mod pi.
class CirclePoint {
public:
  explicit CirclePoint(double theta);
  double theta() const { return theta_; }
  std::complex<double> z() const;

private:
  double theta_;
};

inline double point_gap(const CirclePoint& a, const CirclePoint& b) {
  return std::abs(a.z() - b.z());
}

// The homeomorphism psi_alpha of T: with u = F(theta, k) and a = F(alpha, k),
//
//   psi_alpha(e^{2 i theta}) = e^{2 i am(u + a)},
//
// and the conjugated variant z -> conj(psi_alpha(z)). Under composition the
// plain maps form a commutative group isomorphic to the pencil (parameters
// add mod 2K); adding the conjugated maps extends it by an index-2 factor in
// which every conjugated element is an involution.
class TangentMap {
public:
  static TangentMap from_alpha(const Pencil& p, double alpha,
                               bool conjugated = false);
  static TangentMap from_parameter(const Pencil& p, PencilParameter a,
                                   bool conjugated = false);

  const Pencil& pencil() const { return pencil_; }
  double alpha() const { return alpha_; }
  double a() const { return a_; }
  bool conjugated() const { return conjugated_; }

  // The pencil member this map's chords are tangent to.
  OrientedCircle tangency_circle() const;

private:
  TangentMap(const Pencil& p, double alpha, double a, bool conjugated)
      : pencil_(p), alpha_(alpha), a_(a), conjugated_(conjugated) {}

  Pencil pencil_;
  double alpha_;
  double a_;
  bool conjugated_;
};

CirclePoint apply(const TangentMap& f, CirclePoint z);

// f after g, reduced to closed form: parameters combine mod 2K, conjugation
// flags xor. Throws PencilMismatch when the maps belong to different pencils.
TangentMap compose(const TangentMap& f, const TangentMap& g);

// Distance from the real-axis point (x3, 0) to the chord through two
// distinct circle points: (1/2) |x3 (1 + z1 z2) - (z1 + z2)|.
double chord_distance(CirclePoint z1, CirclePoint z2, double x3);

enum class ChordSide { left, right };

// Side of the positively oriented circle centered at p that the directed
// chord z1 -> z2 runs along: `right` when the chord is co-directed with the
// circle's counterclockwise orientation (the center then sits on the chord's
// counterclockwise side). The signed cross product is taken
// clockwise-positive, so right <=> cross < 0.
ChordSide chord_side(CirclePoint z1, CirclePoint z2, const Point& p);

struct TangencyReport {
  double distance_error = 0.0;  // | chord distance - radius of C_a |
  ChordSide side = ChordSide::right;
  bool tangent = false;
};

// Checks that the directed chord (z, f(z)) is tangent to the positively
// oriented C_a with the center on its right. Plain maps with alpha in
// (0, pi/2] only; at alpha = pi/2 the circle is the point circle L and the
// side is vacuous.
TangencyReport tangency_check(const TangentMap& f, CirclePoint z, double tol);

// The circle every conjugated chord (z, conj-map z) stays tangent to: center
// (dn a + 1)/(dn a - 1), radius 2 cn a / (1 - dn a), on the far side of the
// radical axis. Singular at a = 0.
OrientedCircle conjugate_tangency_circle(const Pencil& p, PencilParameter a);

// The k = 1 (tangent-pencil) group on T, no elliptic functions involved:
//
//   cos theta' = cos alpha cos theta / (1 + sin alpha sin theta)
//   sin theta' = (sin alpha + sin theta) / (1 + sin alpha sin theta)
//
// for alpha in (-pi/2, pi/2). The point theta = pi/2, which is z = (-1, 0),
// stays fixed; cos theta' is never negative.
CirclePoint a1_apply(double alpha, CirclePoint z);

// Parameter of the composition: same formulas applied to (alpha, beta).
double a1_compose(double alpha, double beta);

// The circle chords of a1_apply(alpha, .) are tangent to, internally tangent
// to T at (-1, 0): center ((cos a - 1)/(cos a + 1), 0), radius
// 2 cos a / (cos a + 1). alpha in (0, pi/2).
OrientedCircle a1_circle(double alpha);

}  // namespace coaxal
