#pragma once

#include <vector>

#include "ljmd/config.hpp"
#include "ljmd/vec2.hpp"

namespace ljmd {

// Phase-space state on the periodic box. `positions` are wrapped into
// [0, box_edge); `displacement` accumulates the unwrapped per-step position
// increments, so it lives on the universal cover and may exceed the box.
// Unit mass throughout, so velocities and momenta coincide.
struct SystemState {
  std::vector<Vec2> positions;
  std::vector<Vec2> velocities;
  std::vector<Vec2> displacement;
  double time = 0.0;

  int size() const { return static_cast<int>(positions.size()); }

  static SystemState zeros(int n) {
    SystemState s;
    s.positions.resize(n);
    s.velocities.resize(n);
    s.displacement.resize(n);
    return s;
  }
};

struct EnergyReport {
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

}  // namespace ljmd
