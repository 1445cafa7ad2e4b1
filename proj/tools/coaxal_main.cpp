// coaxal -- command line front end for the coaxal pencil / closure engine.
//
// Subcommands: ell, pencil, map, ngon, scan, render. Structured output is
// JSON on stdout, diagnostics go to stderr, SVG only ever goes to files.
// Exit codes: 0 success, 2 invalid input, 3 numerical inconsistency.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coaxal/errors.hpp"
#include "coaxal/json_io.hpp"
#include "coaxal/quadrature.hpp"
#include "coaxal/svg.hpp"

namespace {

using json = nlohmann::json;
using namespace coaxal;

constexpr double kHalfPi = std::numbers::pi / 2;

// Deterministic, platform-independent generator for seeded start sampling.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform_theta() { return -kHalfPi + std::numbers::pi * uniform01(); }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

OrientedCircle parse_circle(const std::string& text) {
  double v[3];
  std::size_t pos = 0;
  std::string rest = text;
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    v[i] = std::stod(rest, &used);
    rest = rest.substr(used);
    if (i < 2) {
      if (rest.empty() || rest[0] != ',') {
        throw InvalidArgument("circle must be given as \"cx,cy,r\"");
      }
      rest = rest.substr(1);
    }
  }
  (void)pos;
  if (!rest.empty()) throw InvalidArgument("trailing input after \"cx,cy,r\"");
  if (!(v[2] >= 0.0)) throw InvalidArgument("circle radius must be >= 0");
  return {{v[0], v[1]}, v[2], Orientation::unoriented};
}

// ---------------------------------------------------------------- ell ----

struct EllArgs {
  double k = 0.0;
  std::optional<double> theta;
  std::optional<double> u;
  std::string fn;
};

int run_ell(const EllArgs& args) {
  Modulus m = Modulus::from_k(args.k);
  json out{{"fn", args.fn}, {"k", args.k}};
  if (args.theta) out["theta"] = *args.theta;
  if (args.u) out["u"] = *args.u;

  if (args.fn == "K") {
    out["value"] = quarter_period(m).K;
  } else if (args.fn == "F") {
    if (!args.theta) throw InvalidArgument("--fn F needs --theta");
    out["value"] = incomplete_f(*args.theta, m);
  } else {
    double u;
    if (args.u) {
      u = *args.u;
    } else if (args.theta) {
      u = incomplete_f(*args.theta, m);
      out["u"] = u;
    } else {
      throw InvalidArgument("--fn " + args.fn + " needs --u or --theta");
    }
    if (args.fn == "am") {
      out["value"] = amplitude(u, m);
    } else {
      JacobiTriple t = jacobi(u, m);
      out["value"] = args.fn == "sn" ? t.sn : args.fn == "cn" ? t.cn : t.dn;
    }
  }
  print_json(out);
  return 0;
}

// ------------------------------------------------------------- pencil ----

struct PencilArgs {
  std::optional<double> limit_point;
  std::optional<std::string> outer;
  std::optional<std::string> inner;
  int order_n_max = 64;
  double order_tol = 1e-9;
};

json order_report(const Pencil& p, PencilParameter a, int n_max, double tol) {
  auto order = order_of(p, a, n_max, tol);
  if (!order) return nullptr;
  return json(*order);
}

int run_pencil(const PencilArgs& args) {
  if (args.limit_point && (args.outer || args.inner)) {
    throw InvalidArgument("--limit-point excludes --outer/--inner");
  }
  json out;
  if (args.limit_point) {
    Pencil p = Pencil::from_limit_point(*args.limit_point);
    out["pencil"] = p;
  } else {
    if (!args.outer || !args.inner) {
      throw InvalidArgument("need either --limit-point or both --outer and --inner");
    }
    CanonicalFrame frame =
        canonical_frame(parse_circle(*args.outer), parse_circle(*args.inner));
    out["pencil"] = frame.pencil;
    out["transform"] = frame.transform;
    out["inner_parameter"] = frame.inner.a;
    out["inner_alpha"] = amplitude(frame.inner.a, frame.pencil.modulus());
    out["order"] =
        order_report(frame.pencil, frame.inner, args.order_n_max, args.order_tol);
  }
  print_json(out);
  return 0;
}

// ---------------------------------------------------------------- map ----

struct MapArgs {
  double k = 0.0;
  std::optional<double> alpha;
  bool conjugated = false;
  std::vector<double> thetas;
  std::vector<double> compose_alphas;
};

int run_map(const MapArgs& args) {
  Pencil p = Pencil::from_modulus(Modulus::from_k(args.k));
  TangentMap f = [&] {
    if (!args.compose_alphas.empty()) {
      if (args.alpha) throw InvalidArgument("--alpha excludes --compose");
      TangentMap acc = TangentMap::from_alpha(p, args.compose_alphas.front(),
                                              args.conjugated);
      for (std::size_t i = 1; i < args.compose_alphas.size(); ++i) {
        acc = compose(TangentMap::from_alpha(p, args.compose_alphas[i]), acc);
      }
      return acc;
    }
    if (!args.alpha) throw InvalidArgument("need --alpha or --compose");
    return TangentMap::from_alpha(p, *args.alpha, args.conjugated);
  }();

  json points = json::array();
  for (double theta : args.thetas) {
    CirclePoint zin{theta};
    CirclePoint zout = apply(f, zin);
    auto w = zout.z();
    points.push_back(json{{"theta_in", zin.theta()},
                          {"theta_out", zout.theta()},
                          {"x", w.real()},
                          {"y", w.imag()}});
  }
  json out{{"pencil", p}, {"map", f}, {"points", points}};
  print_json(out);
  return 0;
}

// --------------------------------------------------------------- ngon ----

struct NgonArgs {
  double k = 0.0;
  int n = 3;
  int h = 1;
  double start_theta = 0.0;
  std::optional<std::string> svg_path;
  bool diagonals = false;
};

int run_ngon(const NgonArgs& args) {
  Pencil p = Pencil::from_modulus(Modulus::from_k(args.k));
  Trajectory poly = interscribed_ngon(p, args.n, args.h, CirclePoint(args.start_theta));
  PencilParameter a{incomplete_f(poly.alphas.front(), p.modulus())};
  OrientedCircle inner = circle_at(p, a);

  double closure_residual = point_gap(poly.vertices.front(), poly.vertices.back());
  double max_side_residual = 0.0;
  for (int i = 0; i < args.n; ++i) {
    double d = chord_distance(poly.vertices[static_cast<std::size_t>(i)],
                              poly.vertices[static_cast<std::size_t>(i) + 1],
                              inner.center.x);
    max_side_residual = std::max(max_side_residual, std::fabs(d - inner.radius));
  }

  json out{{"pencil", p},
           {"n", args.n},
           {"h", args.h},
           {"alpha", poly.alphas.front()},
           {"a", a.a},
           {"jacobi_ratio", jacobi_ratio(p, poly.alphas.front())},
           {"inner_circle", inner},
           {"closure_residual", closure_residual},
           {"max_side_residual", max_side_residual},
           {"trajectory", poly}};

  Scene scene;
  scene.pencil_circles.push_back(inner);
  if (!p.concentric()) scene.limit_points.push_back({p.limit_point(), 0.0});
  if (std::isfinite(p.radical_axis_x())) scene.radical_axis_x = p.radical_axis_x();
  scene.polygon = poly;

  if (args.diagonals) {
    json diags = json::array();
    for (int step = 2; step <= args.n - 2; ++step) {
      PencilParameter c = diagonal_tangency(p, poly, step);
      OrientedCircle circ = circle_at(p, c);
      double max_resid = 0.0;
      for (int i = 0; i < args.n; ++i) {
        const CirclePoint& z1 = poly.vertices[static_cast<std::size_t>(i)];
        const CirclePoint& z2 =
            poly.vertices[static_cast<std::size_t>((i + step) % args.n)];
        max_resid = std::max(
            max_resid,
            std::fabs(chord_distance(z1, z2, circ.center.x) - circ.radius));
        scene.diagonals.push_back({z1, z2});
      }
      scene.pencil_circles.push_back(circ);
      diags.push_back(json{{"step", step},
                           {"a", c.a},
                           {"circle", circ},
                           {"max_residual", max_resid}});
    }
    out["diagonals"] = diags;
  }

  if (args.svg_path) {
    RenderSpec spec;
    spec.output_path = *args.svg_path;
    render_svg_file(scene, spec);
    out["svg"] = *args.svg_path;
  }
  print_json(out);
  return 0;
}

// --------------------------------------------------------------- scan ----

struct ScanArgs {
  double k = 0.0;
  int n_max = 8;
  double tol = 1e-8;
  int samples = 50;
  std::uint64_t seed = 1;
};

int run_scan(const ScanArgs& args) {
  if (args.n_max < 2) throw InvalidArgument("--n-max must be >= 2");
  Pencil p = Pencil::from_modulus(Modulus::from_k(args.k));
  json rows = json::array();
  for (int n = 2; n <= args.n_max; ++n) {
    for (int h = 1; 2 * h < n || (n == 2 && h == 1); ++h) {
      if (n > 2 && std::gcd(h, n) != 1) continue;
      PencilParameter a = parameter_of_order(p, n, h);
      double alpha = amplitude(a.a, p.modulus());
      ClosureReport report = closure_test(p, alpha, n, args.samples, args.tol);
      // Seeded random starts on top of the deterministic sample.
      SplitMix64 rng{args.seed ^ (static_cast<std::uint64_t>(n) << 32 |
                                  static_cast<std::uint64_t>(h))};
      TangentMap f = TangentMap::from_parameter(p, a);
      double max_residual = report.max_residual;
      for (int s = 0; s < args.samples; ++s) {
        CirclePoint z0{rng.uniform_theta()};
        CirclePoint z = z0;
        for (int i = 0; i < n; ++i) z = apply(f, z);
        max_residual = std::max(max_residual, point_gap(z, z0));
      }
      rows.push_back(json{{"n", n},
                          {"h", h},
                          {"alpha", alpha},
                          {"jacobi_ratio", jacobi_ratio(p, alpha)},
                          {"closes", report.closes && max_residual <= args.tol},
                          {"max_residual", max_residual}});
      if (n == 2) break;
    }
  }
  json out{{"k", args.k},
           {"n_max", args.n_max},
           {"tol", args.tol},
           {"samples", args.samples},
           {"seed", args.seed},
           {"rows", rows}};
  print_json(out);
  return 0;
}

// ------------------------------------------------------------- render ----

struct RenderArgs {
  double k = 0.0;
  std::vector<double> circle_fractions;  // pencil members, as fractions of K
  std::optional<double> conjugate_fraction;
  std::optional<std::vector<int>> ngon;  // n, h
  double start_theta = 0.0;
  bool diagonals = false;
  bool radical_axis = false;
  bool limit_points = false;
  std::string out_path;
  int width = 800;
  int height = 800;
};

int run_render(const RenderArgs& args) {
  Pencil p = Pencil::from_modulus(Modulus::from_k(args.k));
  Scene scene;
  for (double frac : args.circle_fractions) {
    scene.pencil_circles.push_back(circle_at(p, {frac * p.K()}));
  }
  if (args.conjugate_fraction) {
    scene.conjugate_circles.push_back(
        conjugate_tangency_circle(p, {*args.conjugate_fraction * p.K()}));
  }
  if (args.limit_points && !p.concentric()) {
    scene.limit_points.push_back({p.limit_point(), 0.0});
    scene.limit_points.push_back({1.0 / p.limit_point(), 0.0});
  }
  if (args.radical_axis && std::isfinite(p.radical_axis_x())) {
    scene.radical_axis_x = p.radical_axis_x();
  }
  json out{{"pencil", p}};
  if (args.ngon) {
    if (args.ngon->size() != 2) throw InvalidArgument("--ngon takes n,h");
    int n = (*args.ngon)[0], h = (*args.ngon)[1];
    Trajectory poly = interscribed_ngon(p, n, h, CirclePoint(args.start_theta));
    PencilParameter a{incomplete_f(poly.alphas.front(), p.modulus())};
    scene.pencil_circles.push_back(circle_at(p, a));
    if (args.diagonals) {
      for (int step = 2; step <= n - 2; ++step) {
        for (int i = 0; i < n; ++i) {
          scene.diagonals.push_back(
              {poly.vertices[static_cast<std::size_t>(i)],
               poly.vertices[static_cast<std::size_t>((i + step) % n)]});
        }
      }
    }
    scene.polygon = std::move(poly);
    out["n"] = n;
    out["h"] = h;
  }
  RenderSpec spec;
  spec.width = args.width;
  spec.height = args.height;
  spec.output_path = args.out_path;
  render_svg_file(scene, spec);
  out["svg"] = args.out_path;
  out["elements"] = json{{"pencil_circles", scene.pencil_circles.size()},
                         {"conjugate_circles", scene.conjugate_circles.size()},
                         {"diagonals", scene.diagonals.size()},
                         {"limit_points", scene.limit_points.size()}};
  print_json(out);
  return 0;
}

int error_exit_code(const Error& e) {
  return (e.kind() == "numerical_inconsistency" ||
          e.kind() == "quadrature_failure")
             ? 3
             : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic parametrization of hyperbolic circle pencils, the "
               "induced map groups on the unit circle, and the closure engine "
               "for interscribed polygons"};
  app.require_subcommand(1);

  EllArgs ell;
  CLI::App* cmd_ell = app.add_subcommand(
      "ell", "Evaluate the elliptic kernel (F, am, sn, cn, dn, K)");
  cmd_ell->add_option("--k", ell.k, "modulus k in [0, 1)")->required();
  cmd_ell->add_option("--theta", ell.theta, "angle argument");
  cmd_ell->add_option("--u", ell.u, "elliptic argument");
  cmd_ell->add_option("--fn", ell.fn, "one of F, am, sn, cn, dn, K")
      ->required()
      ->check(CLI::IsMember({"F", "am", "sn", "cn", "dn", "K"}));

  PencilArgs pencil;
  CLI::App* cmd_pencil = app.add_subcommand(
      "pencil", "Build a pencil from a limit point or a circle pair");
  cmd_pencil->add_option("--limit-point", pencil.limit_point,
                         "interior limit point L in (-1, 0)");
  cmd_pencil->add_option("--outer", pencil.outer, "outer circle as cx,cy,r");
  cmd_pencil->add_option("--inner", pencil.inner, "inner circle as cx,cy,r");
  cmd_pencil->add_option("--order-n-max", pencil.order_n_max,
                         "largest order to test for the inner circle");
  cmd_pencil->add_option("--order-tol", pencil.order_tol,
                         "tolerance for order detection");

  MapArgs map_args;
  CLI::App* cmd_map =
      app.add_subcommand("map", "Apply a circle-induced map to points of T");
  cmd_map->add_option("--k", map_args.k, "modulus k in [0, 1)")->required();
  cmd_map->add_option("--alpha", map_args.alpha, "map parameter");
  cmd_map->add_flag("--conjugated", map_args.conjugated,
                    "use the conjugated map");
  cmd_map->add_option("--theta", map_args.thetas, "point(s) to map")
      ->expected(-1);
  cmd_map->add_option("--compose", map_args.compose_alphas,
                      "chain of alphas composed left to right")
      ->delimiter(',');

  NgonArgs ngon;
  CLI::App* cmd_ngon = app.add_subcommand(
      "ngon", "Construct and verify an interscribed n-gon");
  cmd_ngon->set_help_flag("--help", "print help");  // frees -h for the winding
  cmd_ngon->add_option("--k", ngon.k, "modulus k in [0, 1)")->required();
  cmd_ngon->add_option("--n", ngon.n, "polygon order")->required();
  cmd_ngon->add_option("--h", ngon.h, "winding number");
  cmd_ngon->add_option("--start-theta", ngon.start_theta, "starting vertex");
  cmd_ngon->add_option("--svg", ngon.svg_path, "write an SVG figure here");
  cmd_ngon->add_flag("--diagonals", ngon.diagonals,
                     "report diagonal tangency circles");

  ScanArgs scan;
  CLI::App* cmd_scan = app.add_subcommand(
      "scan", "Sweep all valid (n, h) orders and verify closure");
  cmd_scan->add_option("--k", scan.k, "modulus k in [0, 1)")->required();
  cmd_scan->add_option("--n-max", scan.n_max, "largest polygon order");
  cmd_scan->add_option("--tol", scan.tol, "closure tolerance on points");
  cmd_scan->add_option("--samples", scan.samples, "starts per row");
  cmd_scan->add_option("--seed", scan.seed, "seed for the random starts");

  RenderArgs render;
  CLI::App* cmd_render =
      app.add_subcommand("render", "Render a pencil scene to SVG");
  cmd_render->add_option("--k", render.k, "modulus k in [0, 1)")->required();
  cmd_render->add_option("--circles", render.circle_fractions,
                         "pencil members as fractions of K")
      ->delimiter(',');
  cmd_render->add_option("--conjugate", render.conjugate_fraction,
                         "conjugate tangency circle at this fraction of K");
  cmd_render->add_option("--ngon", render.ngon, "interscribed polygon as n,h")
      ->delimiter(',');
  cmd_render->add_option("--start-theta", render.start_theta, "starting vertex");
  cmd_render->add_flag("--diagonals", render.diagonals, "draw diagonals");
  cmd_render->add_flag("--radical-axis", render.radical_axis,
                       "draw the radical axis");
  cmd_render->add_flag("--limit-points", render.limit_points,
                       "draw both limit points");
  cmd_render->add_option("--out", render.out_path, "output SVG path")
      ->required();
  cmd_render->add_option("--width", render.width, "pixels");
  cmd_render->add_option("--height", render.height, "pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_ell)) return run_ell(ell);
    if (app.got_subcommand(cmd_pencil)) return run_pencil(pencil);
    if (app.got_subcommand(cmd_map)) return run_map(map_args);
    if (app.got_subcommand(cmd_ngon)) return run_ngon(ngon);
    if (app.got_subcommand(cmd_scan)) return run_scan(scan);
    if (app.got_subcommand(cmd_render)) return run_render(render);
  } catch (const Error& e) {
    print_json(json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
