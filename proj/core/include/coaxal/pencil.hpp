#pragma once

#include <optional>

#include "coaxal/elliptic.hpp"
#include "coaxal/geometry.hpp"

namespace coaxal {

// The hyperbolic coaxal pencil determined by the unit circle T and the
// interior limit point L = (k'-1)/(k'+1) on the negative real axis. Every
// oriented member strictly inside T is named by a parameter a in (-K, K]:
//
//   center (dn a - 1)/(dn a + 1),  radius  2 cn a / (1 + dn a),
//
// with a = 0 giving T itself and a = K the point circle at L. Parameters add
// mod 2K, which is the whole group structure.
//
// k = 0 is carried as a degenerate "rotation pencil": L = 0, the radical
// axis escapes to infinity, and the members are concentric. It is only
// reachable through from_modulus(); the circle-pair constructors reject it.
class Pencil {
public:
  static Pencil from_limit_point(double limit_point);  // L in (-1, 0)
  static Pencil from_modulus(const Modulus& m);        // k in [0, 1)
  // Trusts already-validated parts; used by deserialization.
  static Pencil from_parts(const Modulus& m, QuarterPeriod K, double limit_point,
                           double radical_axis_x);

  const Modulus& modulus() const { return m_; }
  double K() const { return K_.K; }
  QuarterPeriod quarter() const { return K_; }
  double limit_point() const { return limit_point_; }
  double radical_axis_x() const { return radical_axis_x_; }
  bool concentric() const { return m_.k() == 0.0; }

  // Representative of a mod 2K in (-K, K]. Values within 1e-12 of -K snap to
  // K, the other name of the same class.
  double normalize(double a) const;

  bool same_as(const Pencil& other) const;

private:
  Pencil(const Modulus& m, QuarterPeriod K, double limit_point,
         double radical_axis_x)
      : m_(m), K_(K), limit_point_(limit_point),
        radical_axis_x_(radical_axis_x) {}

  Modulus m_;
  QuarterPeriod K_;
  double limit_point_;
  double radical_axis_x_;
};

// A pencil member's name, always stored as the normalized representative.
struct PencilParameter {
  double a = 0.0;
};

struct ElementOrder {
  int n = 0;  // order: smallest n with n*a = 0 mod 2K
  int h = 0;  // winding: n*a = 2hK
};

// Direct similarity w = scale * e^{i rotation} * z + translation carrying an
// input frame onto the canonical one (outer circle -> unit circle).
struct SimilarityTransform {
  double rotation = 0.0;
  double scale = 1.0;
  Point translation;

  Point apply(const Point& z) const;
  Point invert(const Point& w) const;
  OrientedCircle apply(const OrientedCircle& c) const;
  OrientedCircle invert(const OrientedCircle& c) const;
};

struct CanonicalFrame {
  SimilarityTransform transform;  // input frame -> canonical frame
  Pencil pencil;
  PencilParameter inner;
};

OrientedCircle circle_at(const Pencil& p, PencilParameter a);

// Inverse of circle_at: recovers dn a from the center abscissa and the
// parameter's sign from the orientation. Throws NotInPencil when the circle
// is not a member (off-axis center, dn outside [k', 1], or center/radius
// inconsistent with dn^2 + k^2 sn^2 = 1 beyond 1e-8).
PencilParameter parameter_of(const Pencil& p, const OrientedCircle& c);

// c = a + b mod 2K in (-K, K]; commutative, identity 0, inverse -a.
PencilParameter group_op(const Pencil& p, PencilParameter a, PencilParameter b);

// Smallest n <= n_max with |n*a mod 2K| <= tol, with its winding h, or
// nothing. Brute scan for small n_max, continued-fraction convergents of
// a/(2K) above 1000 where stepping would accumulate tolerance.
std::optional<ElementOrder> order_of(const Pencil& p, PencilParameter a,
                                     int n_max, double tol);

// a = 2hK/n for a valid order pair: n = 2 with h = 1, or n >= 3 with
// gcd(h, n) = 1 and 2h < n.
PencilParameter parameter_of_order(const Pencil& p, int n, int h);

// Normalizes an arbitrary disjoint nested circle pair: maps the outer circle
// to T, rotates the inner center onto the negative real axis, recovers the
// limit point from the radical-axis geometry, and names the inner circle.
// Tangent pairs raise TangentPencil (the a1_* path), concentric pairs
// ConcentricPencil, crossing pairs IntersectingCircles.
CanonicalFrame canonical_frame(const OrientedCircle& outer,
                               const OrientedCircle& inner);

}  // namespace coaxal
