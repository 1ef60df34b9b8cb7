#pragma once

#include <functional>

#include "ljmd/config.hpp"
#include "ljmd/forces.hpp"
#include "ljmd/state.hpp"

namespace ljmd {

struct StepObservation {
  long step = 0;
  double time = 0.0;
  EnergyReport energy;
  Vec2 tracer_displacement;  // unwrapped displacement of particle 0
};

using ObservationSink = std::function<void(const StepObservation&)>;

// One Stormer-Verlet step in drift-kick-drift form:
//   q_{n+1/2} = q_n + p_n dt/2
//   p_{n+1}   = p_n - dt grad V(q_{n+1/2})
//   q_{n+1}   = q_{n+1/2} + p_{n+1} dt/2
// Positions are re-wrapped after each half drift; displacement accumulators
// take the pre-wrap increments. Throws NumericalError on non-finite forces.
SystemState verlet_step(const SystemState& state, const SimConfig& config);

// In-place variant reusing force scratch, for long runs.
void verlet_step_inplace(SystemState& state, const SimConfig& config,
                         ForceWorkspace& ws, ForceResult& scratch);

// Advance n_steps, delivering a StepObservation at step 0 and every
// observe_every steps thereafter. NumericalError carries the failing step.
SystemState integrate(SystemState state, const SimConfig& config,
                      long n_steps, long observe_every,
                      const ObservationSink& sink = {});

}  // namespace ljmd
