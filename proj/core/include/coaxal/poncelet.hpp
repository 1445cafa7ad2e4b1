#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coaxal/tangent_map.hpp"

namespace coaxal {

// A tangent chain: vertices[0] = start and vertices[j] is the image of
// vertices[j-1] under the map with parameter alphas[j-1]. Every consecutive
// chord is tangent to the pencil member named by its alpha.
struct Trajectory {
  CirclePoint start;
  std::vector<double> alphas;
  std::vector<CirclePoint> vertices;
};

struct ClosureReport {
  bool closes = false;
  int n = 0;
  std::optional<int> h;      // winding when the chain closes
  double max_residual = 0.0; // worst |final vertex - start| over the starts
  std::optional<double> gamma;  // angle of the n-fold composite
};

Trajectory trajectory(const Pencil& p, CirclePoint start,
                      std::span<const double> alphas);

// The unique gamma in (-pi/2, pi/2] whose map equals the composite of the
// chain: F(gamma) = sum of F(alpha_j) mod 2K. The closing chord from any
// start back to the chain's end is tangent to the member named by F(gamma).
double composite_gamma(const Pencil& p, std::span<const double> alphas);

// Deterministic start sample used by the closure engine: `count` points of a
// golden-ratio sequence over the theta chart plus starts hugging +-pi/2,
// where reduction mistakes would surface.
std::vector<double> closure_start_sample(int count);

// Decides whether n steps of the alpha-map return to the start. Two
// independent verdicts are computed: |n F(alpha) mod 2K| <= 1e-10 on the
// parameter, and n-fold iteration within tol on every sampled start. They
// must agree; a verdict split means the elliptic kernel drifted and raises
// NumericalInconsistency.
ClosureReport closure_test(const Pencil& p, double alpha, int n, int starts,
                           double tol);

// The closed n-gon with vertices on T and sides tangent to the member of
// order n with winding h, grown from an arbitrary start (the closure is
// start-independent). vertices.front() and vertices.back() coincide.
Trajectory interscribed_ngon(const Pencil& p, int n, int h, CirclePoint start);

// For a closed common-alpha polygon, every vertex-to-(vertex+step) chord is
// tangent to the single member named step * a mod 2K; verifies the tangency
// and returns that parameter.
PencilParameter diagonal_tangency(const Pencil& p, const Trajectory& polygon,
                                  int step);

// F(alpha, k) / (2K): equals h/n exactly when alpha = am(2hK/n), which is
// the classical closure condition in integral form.
double jacobi_ratio(const Pencil& p, double alpha);

}  // namespace coaxal
