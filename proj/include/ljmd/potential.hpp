#pragma once

#include <cmath>

#include "ljmd/errors.hpp"
#include "ljmd/vec2.hpp"

namespace ljmd {

// Truncated Lennard-Jones pair potential:
//   V(r) = 4 (r^-12 - r^-6)   for r <= r_cutoff,
//          0                  otherwise.
// With `shifted`, V(r_cutoff) is subtracted on the interacting branch so the
// potential is continuous at the cutoff.
inline double lj_potential(double r, double r_cutoff, bool shifted = false) {
  if (r <= 0.0) throw NumericalError("lj_potential: overlapping particles (r = 0)");
  if (r > r_cutoff) return 0.0;
  double inv2 = 1.0 / (r * r);
  double inv6 = inv2 * inv2 * inv2;
  double v = 4.0 * (inv6 * inv6 - inv6);
  if (shifted) {
    double c2 = 1.0 / (r_cutoff * r_cutoff);
    double c6 = c2 * c2 * c2;
    v -= 4.0 * (c6 * c6 - c6);
  }
  return v;
}

// Force on particle i from particle j, disp = minimum image of (q_i - q_j):
//   F = 24 (2 r^-14 - r^-8) * disp  for r <= r_cutoff, else 0.
// Antisymmetric under disp -> -disp. The shift flag does not alter forces.
inline Vec2 lj_pair_force(const Vec2& disp, double r_cutoff) {
  double r2 = disp.norm2();
  if (r2 == 0.0) throw NumericalError("lj_pair_force: zero displacement");
  if (r2 > r_cutoff * r_cutoff) return {0.0, 0.0};
  double inv2 = 1.0 / r2;
  double inv6 = inv2 * inv2 * inv2;
  double scale = 24.0 * inv2 * inv6 * (2.0 * inv6 - 1.0);
  return scale * disp;
}

}  // namespace ljmd
