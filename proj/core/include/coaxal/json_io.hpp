#pragma once

#include <nlohmann/json.hpp>

#include "coaxal/poncelet.hpp"

namespace coaxal {

NLOHMANN_JSON_SERIALIZE_ENUM(Orientation,
                             {{Orientation::negative, "negative"},
                              {Orientation::unoriented, "unoriented"},
                              {Orientation::positive, "positive"}})

void to_json(nlohmann::json& j, const Point& p);
void from_json(const nlohmann::json& j, Point& p);

void to_json(nlohmann::json& j, const OrientedCircle& c);
void from_json(const nlohmann::json& j, OrientedCircle& c);

void to_json(nlohmann::json& j, const SimilarityTransform& t);
void from_json(const nlohmann::json& j, SimilarityTransform& t);

void to_json(nlohmann::json& j, const ElementOrder& o);
void from_json(const nlohmann::json& j, ElementOrder& o);

void to_json(nlohmann::json& j, const ClosureReport& r);
void from_json(const nlohmann::json& j, ClosureReport& r);

// {alpha, a, conjugated}; rebuilding a map needs its pencil, hence the
// explicit factory instead of a from_json.
void to_json(nlohmann::json& j, const TangentMap& f);
TangentMap tangent_map_from_json(const nlohmann::json& j, const Pencil& p);

}  // namespace coaxal

// Types without default constructors round-trip through adl_serializer.
namespace nlohmann {

template <>
struct adl_serializer<coaxal::CirclePoint> {
  static void to_json(json& j, const coaxal::CirclePoint& z);
  static coaxal::CirclePoint from_json(const json& j);
};

template <>
struct adl_serializer<coaxal::Pencil> {
  static void to_json(json& j, const coaxal::Pencil& p);
  static coaxal::Pencil from_json(const json& j);
};

template <>
struct adl_serializer<coaxal::Trajectory> {
  static void to_json(json& j, const coaxal::Trajectory& t);
  static coaxal::Trajectory from_json(const json& j);
};

}  // namespace nlohmann
