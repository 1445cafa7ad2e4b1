#include "coaxal/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coaxal/errors.hpp"

namespace coaxal {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Frame {
  double cx, cy, scale;
  double px(double x) const { return cx + scale * x; }
  double py(double y) const { return cy - scale * y; }
};

void emit_circle(std::ostringstream& out, const Frame& f, const Point& center,
                 double radius, const char* cls, double stroke,
                 const char* extra = "") {
  out << "  <circle class=\"" << cls << "\" cx=\"" << fmt(f.px(center.x))
      << "\" cy=\"" << fmt(f.py(center.y)) << "\" r=\""
      << fmt(std::fabs(radius) * f.scale) << "\" fill=\"none\" stroke-width=\""
      << fmt(stroke) << "\"" << extra << "/>\n";
}

void emit_dot(std::ostringstream& out, const Frame& f, const Point& p,
              const char* cls, double r_px) {
  out << "  <circle class=\"" << cls << "\" cx=\"" << fmt(f.px(p.x))
      << "\" cy=\"" << fmt(f.py(p.y)) << "\" r=\"" << fmt(r_px) << "\"/>\n";
}

void emit_line(std::ostringstream& out, const Frame& f, const Point& a,
               const Point& b, const char* cls, double stroke) {
  out << "  <line class=\"" << cls << "\" x1=\"" << fmt(f.px(a.x))
      << "\" y1=\"" << fmt(f.py(a.y)) << "\" x2=\"" << fmt(f.px(b.x))
      << "\" y2=\"" << fmt(f.py(b.y)) << "\" stroke-width=\"" << fmt(stroke)
      << "\"/>\n";
}

Point at(const CirclePoint& z) {
  auto w = z.z();
  return {w.real(), w.imag()};
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderSpec& spec) {
  double margin = std::max(spec.margin, 0.05);
  Frame f;
  f.cx = spec.width / 2.0;
  f.cy = spec.height / 2.0;
  f.scale = std::min(spec.width, spec.height) / (2.0 * (1.0 + margin));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
      << spec.width << " " << spec.height << "\">\n"
      << "  <style>\n"
         "    circle, line { stroke: #222; }\n"
         "    .pencil { stroke: #8888cc; }\n"
         "    .conjugate { stroke: #cc8888; stroke-dasharray: 6 4; }\n"
         "    .side { stroke: #226622; }\n"
         "    .diagonal { stroke: #886622; stroke-dasharray: 4 3; }\n"
         "    .radical-axis { stroke: #999999; stroke-dasharray: 2 4; }\n"
         "    .vertex { fill: #226622; stroke: none; }\n"
         "    .limit-point { fill: #aa2222; stroke: none; }\n"
         "  </style>\n";

  emit_circle(out, f, {0.0, 0.0}, 1.0, "unit-circle", spec.circle_stroke);

  if (spec.show_pencil) {
    for (const OrientedCircle& c : scene.pencil_circles) {
      emit_circle(out, f, c.center, c.radius, "pencil", spec.circle_stroke);
    }
  }
  for (const OrientedCircle& c : scene.conjugate_circles) {
    emit_circle(out, f, c.center, c.radius, "conjugate", spec.circle_stroke);
  }

  if (spec.show_radical_axis && scene.radical_axis_x &&
      std::isfinite(*scene.radical_axis_x)) {
    double extent = (1.0 + margin) * 1.5;
    emit_line(out, f, {*scene.radical_axis_x, -extent},
              {*scene.radical_axis_x, extent}, "radical-axis",
              spec.chord_stroke);
  }

  if (spec.show_polygon && scene.polygon) {
    const Trajectory& t = *scene.polygon;
    std::size_t count = t.vertices.size();
    bool closed = count >= 2 &&
                  point_gap(t.vertices.front(), t.vertices.back()) <= 1e-9;
    std::size_t marker_count = closed ? count - 1 : count;
    for (std::size_t i = 0; i + 1 < count; ++i) {
      emit_line(out, f, at(t.vertices[i]), at(t.vertices[i + 1]), "side",
                spec.chord_stroke);
    }
    for (std::size_t i = 0; i < marker_count; ++i) {
      emit_dot(out, f, at(t.vertices[i]), "vertex", 3.5);
    }
    if (spec.show_diagonals) {
      for (const auto& d : scene.diagonals) {
        emit_line(out, f, at(d[0]), at(d[1]), "diagonal", spec.chord_stroke);
      }
    }
  }

  if (spec.show_limit_points) {
    for (const Point& p : scene.limit_points) {
      emit_dot(out, f, p, "limit-point", 3.0);
    }
  }

  out << "</svg>\n";
  return out.str();
}

void render_svg_file(const Scene& scene, const RenderSpec& spec) {
  std::ofstream file(spec.output_path, std::ios::binary);
  if (!file) {
    throw InvalidArgument("cannot open '" + spec.output_path +
                          "' for writing");
  }
  file << render_svg(scene, spec);
  if (!file.good()) {
    throw InvalidArgument("failed while writing '" + spec.output_path + "'");
  }
}

}  // namespace coaxal
