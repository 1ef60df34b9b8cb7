#pragma once

#include <cmath>

#include "ljmd/vec2.hpp"

namespace ljmd {

// Wrap a coordinate into [0, L).
inline double wrap_coord(double x, double box_edge) {
  double w = x - box_edge * std::floor(x / box_edge);
  // floor rounding can land exactly on L when x is a tiny negative number
  if (w >= box_edge) w = 0.0;
  return w;
}

inline Vec2 wrap(const Vec2& q, double box_edge) {
  return {wrap_coord(q.x, box_edge), wrap_coord(q.y, box_edge)};
}

// Componentwise remainder in [-L/2, L/2). Components exactly on the +L/2
// tie map to -L/2 (half-open interval), so the result is deterministic.
inline double min_image_coord(double d, double box_edge) {
  double m = d - box_edge * std::floor(d / box_edge + 0.5);
  if (m >= box_edge / 2) m = -box_edge / 2;
  return m;
}

// Minimum-image displacement a - b on the periodic box.
inline Vec2 min_image_disp(const Vec2& a, const Vec2& b, double box_edge) {
  return {min_image_coord(a.x - b.x, box_edge),
          min_image_coord(a.y - b.y, box_edge)};
}

}  // namespace ljmd
