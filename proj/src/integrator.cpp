#include "ljmd/integrator.hpp"

#include <cmath>

#include "ljmd/geometry.hpp"

namespace ljmd {

namespace {

inline void half_drift(SystemState& s, double half_dt, double box_edge) {
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    Vec2 inc = s.velocities[i] * half_dt;
    s.displacement[i] += inc;
    s.positions[i] = wrap(s.positions[i] + inc, box_edge);
  }
}

inline bool all_finite(const ForceResult& f) {
  for (const Vec2& v : f.forces)
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) return false;
  return true;
}

}  // namespace

void verlet_step_inplace(SystemState& state, const SimConfig& config,
                         ForceWorkspace& ws, ForceResult& scratch) {
  const double half = config.dt / 2.0;
  half_drift(state, half, config.box_edge);
  compute_forces_into(state, config, ws, scratch);
  if (!all_finite(scratch))
    throw NumericalError("verlet_step: non-finite force (blow-up)");
  const int n = state.size();
  for (int i = 0; i < n; ++i) state.velocities[i] += scratch.forces[i] * config.dt;
  // a diverging trajectory can sustain enormous finite velocities for many
  // steps while every pair distance stays outside the cutoff; call it early
  for (const Vec2& v : state.velocities)
    if (!(v.norm2() < 1e12))
      throw NumericalError("verlet_step: velocity blow-up");
  half_drift(state, half, config.box_edge);
  state.time += config.dt;
}

SystemState verlet_step(const SystemState& state, const SimConfig& config) {
  config.validate();
  SystemState next = state;
  ForceWorkspace ws;
  ForceResult scratch;
  verlet_step_inplace(next, config, ws, scratch);
  return next;
}

SystemState integrate(SystemState state, const SimConfig& config,
                      long n_steps, long observe_every,
                      const ObservationSink& sink) {
  config.validate();
  if (n_steps < 0) throw ConfigError("integrate: n_steps must be >= 0");
  if (observe_every < 1)
    throw ConfigError("integrate: observe_every must be >= 1");

  ForceWorkspace ws;
  ForceResult scratch;

  auto observe = [&](long step) {
    if (!sink) return;
    StepObservation obs;
    obs.step = step;
    obs.time = state.time;
    obs.energy = total_energy(state, config);
    obs.tracer_displacement = state.displacement.empty()
                                  ? Vec2{}
                                  : state.displacement[0];
    sink(obs);
  };

  observe(0);
  for (long n = 1; n <= n_steps; ++n) {
    try {
      verlet_step_inplace(state, config, ws, scratch);
    } catch (const NumericalError& e) {
      throw NumericalError(e.what(), n);
    }
    if (n % observe_every == 0) observe(n);
  }
  return state;
}

}  // namespace ljmd
