#include "ljmd/sampler.hpp"

#include <cmath>
#include <exception>

#include "ljmd/geometry.hpp"
#include "ljmd/integrator.hpp"

namespace ljmd {

SystemState lattice_init(const SimConfig& config) {
  config.validate();
  int side = static_cast<int>(std::ceil(std::sqrt(config.n_particles)));
  double spacing = config.box_edge / side;
  // Spacings much below the repulsive core blow up on the first steps.
  if (spacing < 0.9)
    throw ConfigError("lattice_init: box too small for requested count");
  SystemState s = SystemState::zeros(config.n_particles);
  for (int i = 0; i < config.n_particles; ++i) {
    int row = i / side;
    int col = i % side;
    s.positions[i] = {wrap_coord(col * spacing, config.box_edge),
                      wrap_coord(row * spacing, config.box_edge)};
  }
  return s;
}

void langevin_step_inplace(SystemState& state, const SimConfig& config,
                           const SamplerConfig& sampler_cfg, RngStream& rng,
                           ForceWorkspace& ws, ForceResult& scratch) {
  const double h = sampler_cfg.step;
  if (sampler_cfg.gamma == 0.0) {
    // exact degenerate limit: one leapfrog step, no noise consumed
    SimConfig c = config;
    c.dt = h;
    verlet_step_inplace(state, c, ws, scratch);
    return;
  }

  const int n = state.size();
  const double half = h / 2.0;
  const double decay = std::exp(-sampler_cfg.gamma * h);
  const double noise =
      std::sqrt(config.kT() * (1.0 - decay * decay));

  // half drift
  for (int i = 0; i < n; ++i) {
    Vec2 inc = state.velocities[i] * half;
    state.displacement[i] += inc;
    state.positions[i] = wrap(state.positions[i] + inc, config.box_edge);
  }

  compute_forces_into(state, config, ws, scratch);
  for (const Vec2& f : scratch.forces)
    if (!std::isfinite(f.x) || !std::isfinite(f.y))
      throw NumericalError("langevin_step: non-finite force");

  // half kick, OU velocity update, half kick (same midpoint force)
  for (int i = 0; i < n; ++i) {
    Vec2 v = state.velocities[i] + scratch.forces[i] * half;
    v = decay * v + Vec2{noise * rng.normal(), noise * rng.normal()};
    state.velocities[i] = v + scratch.forces[i] * half;
    if (!(state.velocities[i].norm2() < 1e12))
      throw NumericalError("langevin_step: velocity blow-up");
  }

  // half drift
  for (int i = 0; i < n; ++i) {
    Vec2 inc = state.velocities[i] * half;
    state.displacement[i] += inc;
    state.positions[i] = wrap(state.positions[i] + inc, config.box_edge);
  }
  state.time += h;
}

SystemState langevin_step(const SystemState& state, const SimConfig& config,
                          const SamplerConfig& sampler_cfg, RngStream& rng) {
  config.validate();
  sampler_cfg.validate();
  SystemState next = state;
  ForceWorkspace ws;
  ForceResult scratch;
  langevin_step_inplace(next, config, sampler_cfg, rng, ws, scratch);
  return next;
}

namespace {

SystemState fresh_sample(SystemState state) {
  state.displacement.assign(state.positions.size(), {});
  state.time = 0.0;
  return state;
}

}  // namespace

Sample sample_one(const SimConfig& config, const SamplerConfig& sampler_cfg,
                  std::uint64_t root_seed, std::uint64_t stream) {
  config.validate();
  sampler_cfg.validate();
  const long burn_steps = std::lround(sampler_cfg.burn_in / sampler_cfg.step);
  RngStream rng(root_seed, stream);
  SystemState state = lattice_init(config);
  ForceWorkspace ws;
  ForceResult scratch;
  for (long s = 0; s < burn_steps; ++s)
    langevin_step_inplace(state, config, sampler_cfg, rng, ws, scratch);
  return {fresh_sample(std::move(state)), stream};
}

std::vector<Sample> sample_canonical(const SimConfig& config,
                                     const SamplerConfig& sampler_cfg,
                                     int n_samples, std::uint64_t root_seed,
                                     bool independent_chains) {
  config.validate();
  sampler_cfg.validate();
  if (n_samples < 1) throw ConfigError("sample_canonical: n_samples >= 1");

  const long burn_steps =
      std::lround(sampler_cfg.burn_in / sampler_cfg.step);

  if (!independent_chains) {
    // single thinned chain on stream 0
    const long gap_steps = std::lround(sampler_cfg.gap / sampler_cfg.step);
    RngStream rng(root_seed, 0);
    SystemState state = lattice_init(config);
    ForceWorkspace ws;
    ForceResult scratch;
    std::vector<Sample> out;
    out.reserve(n_samples);
    for (long s = 0; s < burn_steps; ++s)
      langevin_step_inplace(state, config, sampler_cfg, rng, ws, scratch);
    out.push_back({fresh_sample(state), 0});
    for (int k = 1; k < n_samples; ++k) {
      for (long s = 0; s < gap_steps; ++s)
        langevin_step_inplace(state, config, sampler_cfg, rng, ws, scratch);
      out.push_back({fresh_sample(state), 0});
    }
    return out;
  }

  // independent chains, one stream per sample; embarrassingly parallel
  std::vector<Sample> out(n_samples);
  std::exception_ptr failure = nullptr;

#pragma omp parallel
  {
    ForceWorkspace ws;
    ForceResult scratch;
#pragma omp for schedule(dynamic)
    for (int k = 0; k < n_samples; ++k) {
      try {
        RngStream rng(root_seed, static_cast<std::uint64_t>(k));
        SystemState state = lattice_init(config);
        for (long s = 0; s < burn_steps; ++s)
          langevin_step_inplace(state, config, sampler_cfg, rng, ws, scratch);
        out[k] = {fresh_sample(std::move(state)),
                  static_cast<std::uint64_t>(k)};
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }

  if (failure) std::rethrow_exception(failure);
  return out;
}

std::pair<double, double> equipartition_report(
    const std::vector<SystemState>& states) {
  if (states.size() < 2)
    throw StatsError("equipartition_report: need at least 2 states");
  std::vector<double> per_state;
  per_state.reserve(states.size());
  for (const SystemState& s : states) {
    double ke = 0.0;
    for (const Vec2& v : s.velocities) ke += 0.5 * v.norm2();
    per_state.push_back(ke / (2.0 * s.size()));
  }
  double mean = 0.0;
  for (double x : per_state) mean += x;
  mean /= per_state.size();
  double var = 0.0;
  for (double x : per_state) var += (x - mean) * (x - mean);
  var /= (per_state.size() - 1);
  double se = std::sqrt(var / per_state.size());
  return {mean, se};
}

}  // namespace ljmd
