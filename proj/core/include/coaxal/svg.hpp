#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coaxal/poncelet.hpp"

namespace coaxal {

// Figure style: the unit circle, a sprinkling of pencil members, limit
// points, the radical axis, and an interscribed polygon with optional
// diagonals. Everything lives in the canonical frame.
struct Scene {
  std::vector<OrientedCircle> pencil_circles;
  std::vector<OrientedCircle> conjugate_circles;
  std::vector<Point> limit_points;
  std::optional<double> radical_axis_x;
  std::optional<Trajectory> polygon;
  std::vector<std::array<CirclePoint, 2>> diagonals;
};

struct RenderSpec {
  int width = 800;
  int height = 800;
  double margin = 0.10;  // clear space around T, as a fraction of its radius
  double circle_stroke = 1.5;
  double chord_stroke = 1.0;
  bool show_pencil = true;
  bool show_radical_axis = true;
  bool show_limit_points = true;
  bool show_polygon = true;
  bool show_diagonals = true;
  std::string output_path;
};

// SVG 1.1 document for the scene. Circles become <circle> elements and
// chords <line> elements, each tagged with a class naming its layer
// (unit-circle, pencil, conjugate, vertex, side, diagonal, limit-point,
// radical-axis). The viewport is square and always contains T with at least
// a 5% margin.
std::string render_svg(const Scene& scene, const RenderSpec& spec);

// Writes render_svg() to spec.output_path; unwritable paths raise
// InvalidArgument.
void render_svg_file(const Scene& scene, const RenderSpec& spec);

}  // namespace coaxal
