#pragma once

#include <cmath>

namespace coaxal {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

enum class Orientation { negative = -1, unoriented = 0, positive = 1 };

// A circle in the canonical frame (the outer circle of a pencil is the unit
// circle there). radius = 0 names a point circle; the unit circle T itself
// always carries Orientation::unoriented.
struct OrientedCircle {
  Point center;
  double radius = 0.0;
  Orientation orientation = Orientation::unoriented;
};

inline OrientedCircle unit_circle() {
  return OrientedCircle{{0.0, 0.0}, 1.0, Orientation::unoriented};
}

// Power of a point: |x - M|^2 - R^2 for a circle of center M, radius R.
inline double power_of_point(const Point& x, const OrientedCircle& c) {
  double dx = x.x - c.center.x;
  double dy = x.y - c.center.y;
  return dx * dx + dy * dy - c.radius * c.radius;
}

}  // namespace coaxal
