#include "coaxal/json_io.hpp"

#include <cmath>
#include <limits>

#include "coaxal/errors.hpp"

namespace coaxal {

using nlohmann::json;

void to_json(json& j, const Point& p) { j = json{{"x", p.x}, {"y", p.y}}; }

void from_json(const json& j, Point& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
}

void to_json(json& j, const OrientedCircle& c) {
  j = json{{"center", c.center},
           {"radius", c.radius},
           {"orientation", c.orientation}};
}

void from_json(const json& j, OrientedCircle& c) {
  j.at("center").get_to(c.center);
  j.at("radius").get_to(c.radius);
  j.at("orientation").get_to(c.orientation);
}

void to_json(json& j, const SimilarityTransform& t) {
  j = json{{"rotation", t.rotation},
           {"scale", t.scale},
           {"translation", t.translation}};
}

void from_json(const json& j, SimilarityTransform& t) {
  j.at("rotation").get_to(t.rotation);
  j.at("scale").get_to(t.scale);
  j.at("translation").get_to(t.translation);
}

void to_json(json& j, const ElementOrder& o) {
  j = json{{"n", o.n}, {"h", o.h}};
}

void from_json(const json& j, ElementOrder& o) {
  j.at("n").get_to(o.n);
  j.at("h").get_to(o.h);
}

void to_json(json& j, const ClosureReport& r) {
  j = json{{"closes", r.closes},
           {"n", r.n},
           {"max_residual", r.max_residual}};
  if (r.h) j["h"] = *r.h;
  if (r.gamma) j["gamma"] = *r.gamma;
}

void from_json(const json& j, ClosureReport& r) {
  j.at("closes").get_to(r.closes);
  j.at("n").get_to(r.n);
  j.at("max_residual").get_to(r.max_residual);
  r.h.reset();
  r.gamma.reset();
  if (j.contains("h") && !j.at("h").is_null()) r.h = j.at("h").get<int>();
  if (j.contains("gamma") && !j.at("gamma").is_null()) {
    r.gamma = j.at("gamma").get<double>();
  }
}

void to_json(json& j, const TangentMap& f) {
  j = json{{"alpha", f.alpha()}, {"a", f.a()}, {"conjugated", f.conjugated()}};
}

TangentMap tangent_map_from_json(const json& j, const Pencil& p) {
  TangentMap f = TangentMap::from_parameter(p, {j.at("a").get<double>()},
                                            j.at("conjugated").get<bool>());
  if (std::fabs(f.alpha() - j.at("alpha").get<double>()) > 1e-9) {
    throw InvalidArgument("serialized tangent map has inconsistent alpha/a");
  }
  return f;
}

}  // namespace coaxal

namespace nlohmann {

using coaxal::CirclePoint;
using coaxal::Pencil;
using coaxal::Trajectory;

void adl_serializer<CirclePoint>::to_json(json& j, const CirclePoint& z) {
  j = json{{"theta", z.theta()}};
}

CirclePoint adl_serializer<CirclePoint>::from_json(const json& j) {
  return CirclePoint(j.at("theta").get<double>());
}

void adl_serializer<Pencil>::to_json(json& j, const Pencil& p) {
  j = json{{"k", p.modulus().k()},
           {"k_comp", p.modulus().k_comp()},
           {"K", p.K()},
           {"L", p.limit_point()},
           {"radical_axis_x", p.radical_axis_x()}};
}

Pencil adl_serializer<Pencil>::from_json(const json& j) {
  coaxal::Modulus m = coaxal::Modulus::from_pair(j.at("k").get<double>(),
                                                 j.at("k_comp").get<double>());
  double big_k = j.at("K").get<double>();
  double limit_point = j.at("L").get<double>();
  const json& axis = j.at("radical_axis_x");
  // nlohmann emits non-finite numbers as null; k = 0 pencils park the
  // radical axis at -infinity.
  double radical_axis_x = axis.is_null()
                              ? -std::numeric_limits<double>::infinity()
                              : axis.get<double>();
  Pencil reference = Pencil::from_modulus(m);
  if (std::fabs(reference.K() - big_k) > 1e-9 ||
      std::fabs(reference.limit_point() - limit_point) > 1e-9) {
    throw coaxal::InvalidArgument("serialized pencil violates its invariants");
  }
  return Pencil::from_parts(m, {big_k}, limit_point, radical_axis_x);
}

void adl_serializer<Trajectory>::to_json(json& j, const Trajectory& t) {
  json vertices = json::array();
  for (const CirclePoint& v : t.vertices) {
    auto z = v.z();
    vertices.push_back(json{{"theta", v.theta()}, {"x", z.real()}, {"y", z.imag()}});
  }
  j = json{{"start", t.start}, {"alphas", t.alphas}, {"vertices", vertices}};
}

Trajectory adl_serializer<Trajectory>::from_json(const json& j) {
  Trajectory t{j.at("start").get<CirclePoint>(),
               j.at("alphas").get<std::vector<double>>(),
               {}};
  for (const json& v : j.at("vertices")) {
    t.vertices.emplace_back(v.at("theta").get<double>());
  }
  return t;
}

}  // namespace nlohmann
