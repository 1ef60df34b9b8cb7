#pragma once

#include <cstdint>

#include "ljmd/errors.hpp"

namespace ljmd {

// Physical and numerical parameters of one simulation. Immutable once
// validated; every run records the full set for reproducibility.
struct SimConfig {
  int n_particles = 100;
  double box_edge = 11.5;
  double r_cutoff = 2.5;
  double temperature = 1.0;
  double boltzmann_k = 1.0;
  double dt = 0.01;
  std::uint64_t seed = 0;
  // Shift the truncated potential so V(r_cutoff) = 0. Off by default: the
  // plain hard truncation is the model actually simulated.
  bool shifted_potential = false;

  void validate() const {
    if (n_particles < 2) throw ConfigError("n_particles must be >= 2");
    if (!(box_edge > 0)) throw ConfigError("box_edge must be > 0");
    if (!(r_cutoff > 0) || r_cutoff > box_edge / 2)
      throw ConfigError("r_cutoff must satisfy 0 < r_cutoff <= box_edge/2");
    if (!(dt > 0)) throw ConfigError("dt must be > 0");
    if (!(temperature > 0)) throw ConfigError("temperature must be > 0");
    if (!(boltzmann_k > 0)) throw ConfigError("boltzmann_k must be > 0");
  }

  double kT() const { return boltzmann_k * temperature; }

  bool operator==(const SimConfig&) const = default;
};

}  // namespace ljmd
