#include "coaxal/quadrature.hpp"

#include <cmath>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

double integrand(double t, double k2) {
  double s = std::sin(t);
  return 1.0 / std::sqrt(1.0 - k2 * s * s);
}

// Classic recursive Simpson with Richardson correction. `whole` is the
// Simpson estimate over [a, b] with midpoint value fm.
double simpson_step(double k2, double a, double fa, double b, double fb,
                    double fm, double whole, double tol, int depth) {
  if (depth <= 0) {
    throw QuadratureFailure("adaptive Simpson exceeded depth 60");
  }
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = integrand(lm, k2);
  double frm = integrand(rm, k2);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(k2, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(k2, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double oracle_f_quadrature(double theta, const Modulus& m, double tol) {
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
  if (!(tol >= 1e-14)) throw InvalidArgument("quadrature tol must be >= 1e-14");
  if (m.k() >= 1.0) {
    throw InvalidArgument("k = 1 rejected: the integral diverges at pi/2");
  }
  if (theta == 0.0) return 0.0;
  double a = 0.0, b = theta, sign = 1.0;
  if (b < a) {
    b = -b;
    sign = -1.0;
  }
  const double k2 = m.k2();
  double fa = integrand(a, k2);
  double fb = integrand(b, k2);
  double fm = integrand(0.5 * (a + b), k2);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  return sign * simpson_step(k2, a, fa, b, fb, fm, whole, tol, 60);
}

}  // namespace coaxal
