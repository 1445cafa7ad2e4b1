#include "coaxal/poncelet.hpp"

#include <cmath>
#include <numbers>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kAnalyticClosureTol = 1e-10;  // on the parameter mod 2K
constexpr double kPolygonClosureTol = 1e-8;    // on points

void require_chain_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= -kHalfPi || alpha > kHalfPi) {
    throw InvalidArgument("chain parameters must lie in (-pi/2, pi/2]");
  }
}

}  // namespace

Trajectory trajectory(const Pencil& p, CirclePoint start,
                      std::span<const double> alphas) {
  Trajectory t{start, {alphas.begin(), alphas.end()}, {start}};
  t.vertices.reserve(alphas.size() + 1);
  CirclePoint cur = start;
  for (double alpha : alphas) {
    require_chain_alpha(alpha);
    cur = apply(TangentMap::from_alpha(p, alpha), cur);
    t.vertices.push_back(cur);
  }
  return t;
}

double composite_gamma(const Pencil& p, std::span<const double> alphas) {
  double sum = 0.0;
  for (double alpha : alphas) {
    require_chain_alpha(alpha);
    sum = p.normalize(sum + incomplete_f(alpha, p.modulus()));
  }
  return amplitude(sum, p.modulus());
}

std::vector<double> closure_start_sample(int count) {
  if (count < 1) throw InvalidArgument("need at least one start");
  std::vector<double> starts;
  starts.reserve(static_cast<std::size_t>(count) + 3);
  const double inv_phi = 0.6180339887498949;
  double x = 0.5;
  for (int i = 0; i < count; ++i) {
    x += inv_phi;
    x -= std::floor(x);
    starts.push_back(-kHalfPi + kPi * x);
  }
  starts.push_back(kHalfPi);
  starts.push_back(kHalfPi - 1e-7);
  starts.push_back(-kHalfPi + 1e-7);
  return starts;
}

ClosureReport closure_test(const Pencil& p, double alpha, int n, int starts,
                           double tol) {
  if (n < 2) throw InvalidArgument("closure_test needs n >= 2");
  if (!(tol > 0.0)) throw InvalidArgument("closure_test needs tol > 0");
  if (!(alpha > 0.0 && alpha <= kHalfPi)) {
    throw InvalidArgument("closure_test needs alpha in (0, pi/2]");
  }
  TangentMap f = TangentMap::from_alpha(p, alpha);
  const double two_k = 2.0 * p.K();
  double param_residual = std::remainder(n * f.a(), two_k);
  bool analytic = std::fabs(param_residual) <= kAnalyticClosureTol;

  double max_residual = 0.0;
  for (double theta : closure_start_sample(starts)) {
    CirclePoint z0{theta};
    CirclePoint z = z0;
    for (int i = 0; i < n; ++i) z = apply(f, z);
    max_residual = std::max(max_residual, point_gap(z, z0));
  }
  bool empirical = max_residual <= tol;

  if (analytic != empirical) {
    throw NumericalInconsistency(
        "closure verdicts disagree: parameter test says " +
        std::string(analytic ? "closed" : "open") + " but iteration says " +
        std::string(empirical ? "closed" : "open"));
  }
  ClosureReport report;
  report.closes = empirical;
  report.n = n;
  report.max_residual = max_residual;
  report.gamma = amplitude(param_residual, p.modulus());
  if (report.closes) {
    report.h = static_cast<int>(std::llround(n * f.a() / two_k));
  }
  return report;
}

Trajectory interscribed_ngon(const Pencil& p, int n, int h, CirclePoint start) {
  PencilParameter a = parameter_of_order(p, n, h);
  TangentMap f = TangentMap::from_parameter(p, a);
  Trajectory t{start, std::vector<double>(static_cast<std::size_t>(n), f.alpha()),
               {start}};
  CirclePoint cur = start;
  for (int i = 0; i < n; ++i) {
    cur = apply(f, cur);
    t.vertices.push_back(cur);
  }
  return t;
}

PencilParameter diagonal_tangency(const Pencil& p, const Trajectory& polygon,
                                  int step) {
  const int n = static_cast<int>(polygon.alphas.size());
  if (n < 2) throw InvalidArgument("polygon has fewer than two sides");
  if (step < 1 || step >= n) {
    throw InvalidArgument("diagonal step must lie in [1, n)");
  }
  for (double alpha : polygon.alphas) {
    if (std::fabs(alpha - polygon.alphas.front()) > 1e-12) {
      throw InvalidArgument("diagonal tangency needs a common-alpha polygon");
    }
  }
  if (point_gap(polygon.vertices.front(), polygon.vertices.back()) >
      kPolygonClosureTol) {
    throw InvalidArgument("polygon is not closed");
  }
  double a = incomplete_f(polygon.alphas.front(), p.modulus());
  PencilParameter c{p.normalize(step * a)};
  OrientedCircle circle = circle_at(p, c);
  for (int i = 0; i < n; ++i) {
    const CirclePoint& z1 = polygon.vertices[static_cast<std::size_t>(i)];
    const CirclePoint& z2 =
        polygon.vertices[static_cast<std::size_t>((i + step) % n)];
    double residual =
        std::fabs(chord_distance(z1, z2, circle.center.x) - circle.radius);
    if (residual > 1e-9) {
      throw NumericalInconsistency(
          "diagonal chord missed its tangency circle by more than 1e-9");
    }
  }
  return c;
}

double jacobi_ratio(const Pencil& p, double alpha) {
  if (!(alpha > 0.0 && alpha <= kHalfPi)) {
    throw InvalidArgument("jacobi_ratio needs alpha in (0, pi/2]");
  }
  return incomplete_f(alpha, p.modulus()) / (2.0 * p.K());
}

}  // namespace coaxal
