#include "coaxal/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string(name) + " must be finite");
  }
}

void require_incomplete_modulus(const Modulus& m) {
  if (m.k() >= 1.0) {
    throw InvalidArgument("k = 1 rejected: the integral diverges at pi/2");
  }
}

// Carlson's symmetric integral R_F(x, y, z) by the duplication algorithm
// (Carlson 1995, eqs 2.2-2.7). Arguments nonnegative, at most one zero.
double carlson_rf(double x, double y, double z) {
  static const double tol_rf = std::pow(3 * kEps * 0.01, 1.0 / 8.0);
  double a0 = (x + y + z) / 3;
  double an = a0;
  double q = std::max({std::fabs(a0 - x), std::fabs(a0 - y),
                       std::fabs(a0 - z)}) /
             tol_rf;
  double xn = x, yn = y, zn = z, mul = 1;
  while (q >= mul * std::fabs(an)) {
    // Max ~6 trips.
    double lam = std::sqrt(xn) * std::sqrt(yn) + std::sqrt(yn) * std::sqrt(zn) +
                 std::sqrt(zn) * std::sqrt(xn);
    an = (an + lam) / 4;
    xn = (xn + lam) / 4;
    yn = (yn + lam) / 4;
    zn = (zn + lam) / 4;
    mul *= 4;
  }
  double dx = (a0 - x) / (mul * an);
  double dy = (a0 - y) / (mul * an);
  double dz = -(dx + dy);
  double e2 = dx * dy - dz * dz;
  double e3 = dx * dy * dz;
  // Seventh-order series, http://dlmf.nist.gov/19.36.E1 in Horner form.
  return (e3 * (6930 * e3 + e2 * (15015 * e2 - 16380) + 17160) +
          e2 * ((10010 - 5775 * e2) * e2 - 24024) + 240240) /
         (240240 * std::sqrt(an));
}

// F(theta, k) on the principal interval theta in [0, pi/2].
double f_principal(double theta, double k) {
  double s = std::sin(theta);
  double c = std::cos(theta);
  if (s == 0.0) return 0.0;
  return s * carlson_rf(c * c, (1 - k * s) * (1 + k * s), 1.0);
}

// Splits u into u = 2nK + ur with ur in [-K, K]; returns ur, stores n.
double reduce_elliptic_argument(double u, double big_k, double* n_out) {
  double two_k = 2 * big_k;
  double n = std::round(u / two_k);
  double ur = u - n * two_k;
  if (ur > big_k) {
    ur -= two_k;
    n += 1;
  } else if (ur < -big_k) {
    ur += two_k;
    n -= 1;
  }
  *n_out = n;
  return ur;
}

// am on [0, K] -> [0, pi/2]: Newton on F(theta) - u with the derivative
// dF/dtheta = 1/sqrt(1 - k^2 sin^2 theta), bracketed by bisection. F is a
// strictly increasing diffeomorphism with derivative in [1, 1/k'], so the
// bracket never stalls.
double amplitude_principal(double u, double k, double big_k) {
  if (u <= 0.0) return 0.0;
  if (u >= big_k) return kHalfPi;
  double lo = 0.0, hi = kHalfPi;
  double theta = kHalfPi * (u / big_k);
  if (theta <= lo || theta >= hi) theta = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    double r = f_principal(theta, k) - u;
    if (std::fabs(r) <= 2 * kEps * std::max(1.0, u)) break;
    if (r > 0) {
      hi = theta;
    } else {
      lo = theta;
    }
    double s = std::sin(theta);
    double dn = std::sqrt((1 - k * s) * (1 + k * s));
    double next = theta - r * dn;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - theta) <= kEps * kHalfPi) {
      theta = next;
      break;
    }
    theta = next;
  }
  return theta;
}

}  // namespace

Modulus Modulus::from_k(double k) {
  require_finite(k, "k");
  if (k < 0.0 || k > 1.0) {
    throw InvalidArgument("modulus k must lie in [0, 1]");
  }
  return Modulus(k, std::sqrt((1 - k) * (1 + k)));
}

Modulus Modulus::from_complement(double k_comp) {
  require_finite(k_comp, "k'");
  if (k_comp < 0.0 || k_comp > 1.0) {
    throw InvalidArgument("complementary modulus k' must lie in [0, 1]");
  }
  return Modulus(std::sqrt((1 - k_comp) * (1 + k_comp)), k_comp);
}

Modulus Modulus::from_pair(double k, double k_comp) {
  require_finite(k, "k");
  require_finite(k_comp, "k'");
  if (k < 0.0 || k > 1.0 || k_comp < 0.0 || k_comp > 1.0 ||
      std::fabs(k * k + k_comp * k_comp - 1.0) > 1e-14) {
    throw InvalidArgument("(k, k') is not a modulus pair: k^2 + k'^2 != 1");
  }
  return Modulus(k, k_comp);
}

double incomplete_f(double theta, const Modulus& m) {
  require_finite(theta, "theta");
  require_incomplete_modulus(m);
  const double k = m.k();
  if (k == 0.0) return theta;
  // Quasi-periodicity: F(tr + n*pi) = F(tr) + 2nK with tr in [-pi/2, pi/2].
  // std::remainder is exact, so oddness and the period law hold to the ulp.
  double tr = std::remainder(theta, kPi);
  double n = std::round((theta - tr) / kPi);
  double f = tr < 0 ? -f_principal(-tr, k) : f_principal(tr, k);
  if (n != 0.0) f += 2 * n * quarter_period(m).K;
  return f;
}

QuarterPeriod quarter_period(const Modulus& m) {
  require_incomplete_modulus(m);
  double a = 1.0;
  double b = m.k_comp();
  for (int it = 0; it < 40 && (a - b) > kEps * a; ++it) {
    double mid = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mid;
  }
  return QuarterPeriod{kPi / (a + b)};
}

double amplitude(double u, const Modulus& m) {
  require_finite(u, "u");
  require_incomplete_modulus(m);
  const double k = m.k();
  if (k == 0.0) return u;
  const double big_k = quarter_period(m).K;
  double n;
  double ur = reduce_elliptic_argument(u, big_k, &n);
  double theta = ur < 0 ? -amplitude_principal(-ur, k, big_k)
                        : amplitude_principal(ur, k, big_k);
  return theta + n * kPi;
}

JacobiTriple jacobi(double u, const Modulus& m) {
  require_finite(u, "u");
  require_incomplete_modulus(m);
  const double k = m.k();
  if (k == 0.0) return {std::cos(u), std::sin(u), 1.0};
  const double big_k = quarter_period(m).K;
  double n;
  double ur = reduce_elliptic_argument(u, big_k, &n);
  double theta = ur < 0 ? -amplitude_principal(-ur, k, big_k)
                        : amplitude_principal(ur, k, big_k);
  // cn(u + 2nK) = (-1)^n cn u and likewise for sn; dn has period 2K. Applying
  // the sign to the reduced values keeps the flip exact for large n.
  double sign = std::fabs(std::remainder(n, 2.0)) > 0.5 ? -1.0 : 1.0;
  double s = std::sin(theta);
  double c = std::cos(theta);
  return {sign * c, sign * s, std::sqrt((1 - k * s) * (1 + k * s))};
}

double addition_cn(double u, double v, const Modulus& m) {
  JacobiTriple ju = jacobi(u, m);
  JacobiTriple jv = jacobi(v, m);
  double den = 1 - m.k2() * ju.sn * ju.sn * jv.sn * jv.sn;
  return (ju.cn * jv.cn - ju.sn * jv.sn * ju.dn * jv.dn) / den;
}

double addition_sn(double u, double v, const Modulus& m) {
  JacobiTriple ju = jacobi(u, m);
  JacobiTriple jv = jacobi(v, m);
  double den = 1 - m.k2() * ju.sn * ju.sn * jv.sn * jv.sn;
  return (ju.sn * jv.cn * jv.dn + jv.sn * ju.cn * ju.dn) / den;
}

}  // namespace coaxal
