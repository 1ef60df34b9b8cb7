#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ljmd/config.hpp"
#include "ljmd/forces.hpp"
#include "ljmd/rng.hpp"
#include "ljmd/state.hpp"

namespace ljmd {

// Langevin equilibration parameters. The target density is the canonical
// distribution exp(-H / kT) up to normalization; Z is never computed.
struct SamplerConfig {
  double gamma = 1.0;       // friction, 1/time
  double step = 0.001;      // Langevin step h
  double burn_in = 100.0;   // equilibration per chain, time units
  double gap = 10.0;        // decorrelation gap between samples, time units

  void validate() const {
    if (!(gamma >= 0)) throw ConfigError("gamma must be >= 0");
    if (!(step > 0) || step > 0.005)
      throw ConfigError("langevin step must be in (0, 0.005]");
    if (!(burn_in > 0)) throw ConfigError("burn_in must be > 0");
    if (!(gap > 0)) throw ConfigError("gap must be > 0");
  }

  bool operator==(const SamplerConfig&) const = default;
};

// A canonical sample tagged with the RNG stream that produced it.
struct Sample {
  SystemState state;
  std::uint64_t stream = 0;
};

// Overlap-free square-lattice seed state: ceil(sqrt(n)) points per side,
// zero velocities, zero displacement.
SystemState lattice_init(const SimConfig& config);

// One step of kinetic Langevin dynamics
//   dq = p dt,  dp = -grad V dt - gamma p dt + sqrt(2 gamma kT) dW
// discretized as half-drift, half-kick, exact Ornstein-Uhlenbeck velocity
// update (decay e^{-gamma h}, noise std sqrt(kT (1 - e^{-2 gamma h}))),
// half-kick, half-drift. With gamma = 0 this is exactly one verlet_step of
// length h (the OU map degenerates to the identity and no noise is drawn).
void langevin_step_inplace(SystemState& state, const SimConfig& config,
                           const SamplerConfig& sampler_cfg, RngStream& rng,
                           ForceWorkspace& ws, ForceResult& scratch);

SystemState langevin_step(const SystemState& state, const SimConfig& config,
                          const SamplerConfig& sampler_cfg, RngStream& rng);

// Draw n_samples states from the canonical distribution. With
// independent_chains (the default for ensembles) sample k runs its own
// burn-in on stream k; otherwise a single chain on stream 0 is thinned
// every `gap` time units. Emitted states have displacement and time reset
// to zero. Results are ordered by stream index regardless of thread count.
std::vector<Sample> sample_canonical(const SimConfig& config,
                                     const SamplerConfig& sampler_cfg,
                                     int n_samples, std::uint64_t root_seed,
                                     bool independent_chains = true);

// One member of an independent-chain ensemble: the state sample_canonical
// would place at index `stream`, computable in isolation.
Sample sample_one(const SimConfig& config, const SamplerConfig& sampler_cfg,
                  std::uint64_t root_seed, std::uint64_t stream);

// Mean kinetic energy per degree of freedom across states, with the
// standard error of that mean. Requires at least 2 states.
std::pair<double, double> equipartition_report(
    const std::vector<SystemState>& states);

}  // namespace ljmd
