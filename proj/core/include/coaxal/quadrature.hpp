#pragma once

#include "coaxal/elliptic.hpp"

namespace coaxal {

// Adaptive-Simpson value of integral_0^theta dt / sqrt(1 - k^2 sin^2 t) with
// absolute error <= tol (tol >= 1e-14). Deliberately naive: it shares no code
// with incomplete_f() and exists to certify it. Throws QuadratureFailure if
// the subdivision budget (depth 60) is exhausted before reaching tol.
double oracle_f_quadrature(double theta, const Modulus& m, double tol);

}  // namespace coaxal
