#pragma once

#include <vector>

#include "ljmd/config.hpp"
#include "ljmd/state.hpp"
#include "ljmd/vec2.hpp"

namespace ljmd {

struct ForceResult {
  std::vector<Vec2> forces;
  double potential = 0.0;
};

// Reusable scratch for force evaluation inside integration loops.
struct ForceWorkspace {
  struct Impl;
  ForceWorkspace();
  ~ForceWorkspace();
  ForceWorkspace(const ForceWorkspace&) = delete;
  ForceWorkspace& operator=(const ForceWorkspace&) = delete;
  Impl* impl;
};

// Cell-list evaluation, parallel over target particles. Per particle the
// accumulation runs over neighbor indices in ascending order, so the result
// is bit-identical to compute_forces_naive and independent of thread count.
ForceResult compute_forces(const SystemState& state, const SimConfig& config);

// Same result, writing into `out` and recycling workspace buffers.
void compute_forces_into(const SystemState& state, const SimConfig& config,
                         ForceWorkspace& ws, ForceResult& out);

// Serial all-pairs reference. Kept as the independent oracle for the
// cell-list path and for benchmarking.
ForceResult compute_forces_naive(const SystemState& state,
                                 const SimConfig& config);

EnergyReport total_energy(const SystemState& state, const SimConfig& config);

}  // namespace ljmd
