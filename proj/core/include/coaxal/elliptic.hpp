#pragma once

namespace coaxal {

// Elliptic modulus pair (k, k') with k^2 + k'^2 = 1.
//
// k = 1 (k' = 0) may be stored -- it names the tangent-pencil limit -- but
// every evaluator in this header rejects it because the underlying integral
// diverges there; that regime is served by the a1_* family in tangent_map.hpp.
class Modulus {
public:
  static Modulus from_k(double k);
  static Modulus from_complement(double k_comp);
  // Accepts an already-paired (k, k') as long as k^2 + k'^2 = 1 holds to
  // rounding; keeps both values bit-exact (deserialization path).
  static Modulus from_pair(double k, double k_comp);

  double k() const { return k_; }
  double k_comp() const { return k_comp_; }
  double k2() const { return k_ * k_; }

private:
  Modulus(double k, double k_comp) : k_(k), k_comp_(k_comp) {}
  double k_;
  double k_comp_;
};

// K = F(pi/2, k), the complete elliptic integral of the first kind.
struct QuarterPeriod {
  double K;
};

struct JacobiTriple {
  double cn;
  double sn;
  double dn;
};

// Incomplete elliptic integral of the first kind
//
//   u = F(theta, k) = integral_0^theta dt / sqrt(1 - k^2 sin^2 t),
//
// for any finite theta. Odd and strictly increasing in theta, and satisfies
// F(theta + n*pi) = F(theta) + 2nK exactly by range reduction. The principal
// piece is evaluated through Carlson's symmetric form R_F.
double incomplete_f(double theta, const Modulus& m);

// Complete integral K(k) by the arithmetic-geometric mean.
QuarterPeriod quarter_period(const Modulus& m);

// Amplitude am(u), the inverse of theta -> F(theta, k). Monotone increasing
// with am(u + 2K) = am(u) + pi. Newton iteration on the reduced interval with
// a bisection safeguard.
double amplitude(double u, const Modulus& m);

// cn u = cos(am u), sn u = sin(am u), dn u = sqrt(1 - k^2 sn^2 u).
JacobiTriple jacobi(double u, const Modulus& m);

// Addition laws, evaluated literally from the right-hand-side formulas:
//
//   cn(u+v) = (cn u cn v - sn u sn v dn u dn v) / (1 - k^2 sn^2 u sn^2 v)
//   sn(u+v) = (sn u cn v dn v + sn v cn u dn u) / (1 - k^2 sn^2 u sn^2 v)
//
// The denominator is bounded below by k'^2 > 0 for real arguments.
double addition_cn(double u, double v, const Modulus& m);
double addition_sn(double u, double v, const Modulus& m);

}  // namespace coaxal
