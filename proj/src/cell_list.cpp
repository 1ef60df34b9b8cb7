#include "ljmd/cell_list.hpp"

#include <algorithm>
#include <cmath>

namespace ljmd {

int CellList::cell_of(double x, double y) const {
  int cx = static_cast<int>(x / cell_edge);
  int cy = static_cast<int>(y / cell_edge);
  // positions sit in [0, L) but x/cell_edge can round up to the edge; a
  // blowing-up trajectory can also arrive here with garbage coordinates
  // before the integrator's finiteness checks fire, so clamp both ends
  // rather than index out of bounds
  if (cx < 0) cx = 0;
  if (cy < 0) cy = 0;
  if (cx >= cells_per_side) cx = cells_per_side - 1;
  if (cy >= cells_per_side) cy = cells_per_side - 1;
  return cy * cells_per_side + cx;
}

void CellList::gather_neighborhood(double x, double y,
                                   std::vector<int>& out) const {
  out.clear();
  int home = cell_of(x, y);
  int hx = home % cells_per_side;
  int hy = home / cells_per_side;
  int seen[9];
  int n_seen = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      int cx = (hx + dx + cells_per_side) % cells_per_side;
      int cy = (hy + dy + cells_per_side) % cells_per_side;
      int c = cy * cells_per_side + cx;
      bool dup = false;
      for (int k = 0; k < n_seen; ++k)
        if (seen[k] == c) { dup = true; break; }
      if (dup) continue;
      seen[n_seen++] = c;
      out.insert(out.end(), buckets[c].begin(), buckets[c].end());
    }
  }
  std::sort(out.begin(), out.end());
}

void build_cell_list_into(const SystemState& state, const SimConfig& config,
                          CellList& cl) {
  cl.cells_per_side =
      std::max(1, static_cast<int>(config.box_edge / config.r_cutoff));
  cl.cell_edge = config.box_edge / cl.cells_per_side;
  std::size_t n_cells =
      static_cast<std::size_t>(cl.cells_per_side) * cl.cells_per_side;
  if (cl.buckets.size() != n_cells) cl.buckets.resize(n_cells);
  for (auto& b : cl.buckets) b.clear();
  for (int i = 0; i < state.size(); ++i)
    cl.buckets[cl.cell_of(state.positions[i].x, state.positions[i].y)]
        .push_back(i);
}

CellList build_cell_list(const SystemState& state, const SimConfig& config) {
  CellList cl;
  build_cell_list_into(state, config, cl);
  return cl;
}

}  // namespace ljmd
