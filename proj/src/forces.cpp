#include "ljmd/forces.hpp"

#include <vector>

#include "ljmd/cell_list.hpp"
#include "ljmd/geometry.hpp"
#include "ljmd/potential.hpp"

namespace ljmd {

namespace {

// Force on i and the i<j potential share one accumulation routine so both
// code paths sum the same terms in the same (ascending j) order. Terms with
// r > r_cutoff are skipped in both paths; they would contribute exact zeros.
struct Accum {
  Vec2 force;
  double potential = 0.0;  // pairs with j > i only
};

inline void accumulate_pair(int i, int j, const SystemState& state,
                            const SimConfig& cfg, Accum& acc) {
  Vec2 d = min_image_disp(state.positions[i], state.positions[j],
                          cfg.box_edge);
  double r2 = d.norm2();
  if (r2 == 0.0)
    throw NumericalError("compute_forces: coincident particles");
  if (r2 > cfg.r_cutoff * cfg.r_cutoff) return;
  double inv2 = 1.0 / r2;
  double inv6 = inv2 * inv2 * inv2;
  acc.force += (24.0 * inv2 * inv6 * (2.0 * inv6 - 1.0)) * d;
  if (j > i) {
    double v = 4.0 * (inv6 * inv6 - inv6);
    if (cfg.shifted_potential) {
      double c2 = 1.0 / (cfg.r_cutoff * cfg.r_cutoff);
      double c6 = c2 * c2 * c2;
      v -= 4.0 * (c6 * c6 - c6);
    }
    acc.potential += v;
  }
}

}  // namespace

struct ForceWorkspace::Impl {
  CellList cl;
  std::vector<double> pot;
  // per home cell, the sorted union of the 3x3 bucket neighborhood; every
  // particle in a cell shares the same list, so it is built once per eval
  std::vector<std::vector<int>> cell_neigh;
};

ForceWorkspace::ForceWorkspace() : impl(new Impl) {}
ForceWorkspace::~ForceWorkspace() { delete impl; }

void compute_forces_into(const SystemState& state, const SimConfig& config,
                         ForceWorkspace& ws, ForceResult& out) {
  const int n = state.size();
  CellList& cl = ws.impl->cl;
  build_cell_list_into(state, config, cl);
  out.forces.assign(n, {});
  out.potential = 0.0;
  std::vector<double>& pot = ws.impl->pot;
  pot.assign(n, 0.0);

  const std::size_t n_cells = cl.buckets.size();
  std::vector<std::vector<int>>& cell_neigh = ws.impl->cell_neigh;
  if (cell_neigh.size() != n_cells) cell_neigh.resize(n_cells);
  for (std::size_t c = 0; c < n_cells; ++c) {
    int cx = static_cast<int>(c) % cl.cells_per_side;
    double x = (cx + 0.5) * cl.cell_edge;
    double y = (static_cast<int>(c) / cl.cells_per_side + 0.5) * cl.cell_edge;
    cl.gather_neighborhood(x, y, cell_neigh[c]);
  }

  bool coincident = false;  // exceptions may not cross the parallel region

#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int i = 0; i < n; ++i) {
      try {
        const std::vector<int>& neigh = cell_neigh[cl.cell_of(
            state.positions[i].x, state.positions[i].y)];
        Accum acc;
        for (int j : neigh) {
          if (j == i) continue;
          accumulate_pair(i, j, state, config, acc);
        }
        out.forces[i] = acc.force;
        pot[i] = acc.potential;
      } catch (const NumericalError&) {
#pragma omp atomic write
        coincident = true;
      }
    }
  }

  if (coincident)
    throw NumericalError("compute_forces: coincident particles");

  // serial reduction in index order keeps the total independent of threads
  for (int i = 0; i < n; ++i) out.potential += pot[i];
}

ForceResult compute_forces(const SystemState& state, const SimConfig& config) {
  ForceWorkspace ws;
  ForceResult result;
  compute_forces_into(state, config, ws, result);
  return result;
}

ForceResult compute_forces_naive(const SystemState& state,
                                 const SimConfig& config) {
  const int n = state.size();
  ForceResult result;
  result.forces.assign(n, {});
  for (int i = 0; i < n; ++i) {
    Accum acc;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      accumulate_pair(i, j, state, config, acc);
    }
    result.forces[i] = acc.force;
    result.potential += acc.potential;
  }
  return result;
}

EnergyReport total_energy(const SystemState& state, const SimConfig& config) {
  EnergyReport e;
  for (const Vec2& v : state.velocities) e.kinetic += 0.5 * v.norm2();
  e.potential = compute_forces(state, config).potential;
  e.total = e.kinetic + e.potential;
  return e;
}

}  // namespace ljmd
