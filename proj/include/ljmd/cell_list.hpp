#pragma once

#include <vector>

#include "ljmd/config.hpp"
#include "ljmd/state.hpp"

namespace ljmd {

// Spatial hash over the periodic box. Cell edge >= r_cutoff, so every pair
// within the cutoff lies in the same or an adjacent (wrapped) cell.
struct CellList {
  int cells_per_side = 1;
  double cell_edge = 0.0;
  // Buckets hold particle indices in ascending order (filled by index).
  std::vector<std::vector<int>> buckets;

  int cell_of(double x, double y) const;

  // Indices of all particles in the 3x3 neighborhood of the cell containing
  // (x, y), with periodic wrap, sorted ascending. Duplicate cells (when
  // cells_per_side < 3) are visited once.
  void gather_neighborhood(double x, double y, std::vector<int>& out) const;
};

CellList build_cell_list(const SystemState& state, const SimConfig& config);

// Rebuild in place, reusing bucket storage (hot path of the integrator).
void build_cell_list_into(const SystemState& state, const SimConfig& config,
                          CellList& cl);

}  // namespace ljmd
