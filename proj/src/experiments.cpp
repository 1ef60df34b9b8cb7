#include "ljmd/experiments.hpp"

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ljmd/checkpoint.hpp"
#include "ljmd/integrator.hpp"
#include "ljmd/stats.hpp"

namespace ljmd {

namespace {

namespace fs = std::filesystem;

constexpr double kBlowUpDrift = 1e3;  // |H(t) - H(0)| beyond this is a blow-up

long steps_per_interval(double dt, double interval) {
  long k = std::lround(interval / dt);
  if (k < 1 || std::fabs(k * dt - interval) > 1e-9)
    throw ConfigError("output_interval must be a positive integer multiple "
                      "of dt");
  return k;
}

std::ofstream open_csv(const std::string& out_dir, const std::string& name,
                       const ExperimentManifest& manifest) {
  fs::create_directories(out_dir);
  std::string path = (fs::path(out_dir) / name).string();
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  std::istringstream lines(manifest.serialize());
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
  return out;
}

std::string member_ckpt_name(int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "member_%05d.ckpt", k);
  return buf;
}

// Advance one member to the horizon, invoking `record(k, state)` on the
// output grid (k = 0 at the initial state). Throws NumericalError on
// blow-up.
template <typename Record>
void run_on_grid(SystemState& state, const SimConfig& sim, double horizon,
                 double output_interval, Record&& record) {
  const long spi = steps_per_interval(sim.dt, output_interval);
  const long k_max = std::lround(horizon / output_interval);
  ForceWorkspace ws;
  ForceResult scratch;
  record(0L, state);
  for (long k = 1; k <= k_max; ++k) {
    for (long s = 0; s < spi; ++s) verlet_step_inplace(state, sim, ws, scratch);
    record(k, state);
  }
}

double kinetic_energy(const SystemState& s) {
  double ke = 0.0;
  for (const Vec2& v : s.velocities) ke += 0.5 * v.norm2();
  return ke;
}

}  // namespace

std::vector<SystemState> ensemble_initial_states(
    const ExperimentManifest& manifest, int count,
    const std::string& checkpoint_dir) {
  if (checkpoint_dir.empty()) {
    std::vector<Sample> samples =
        sample_canonical(manifest.sim, manifest.sampler, count, manifest.seed);
    std::vector<SystemState> states;
    states.reserve(count);
    for (const Sample& s : samples) states.push_back(s.state);
    return states;
  }

  // member k is a pure function of (manifest, k), so present members load
  // from disk and only the missing ones burn in
  fs::create_directories(checkpoint_dir);
  std::vector<SystemState> states(count);
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      std::string path =
          (fs::path(checkpoint_dir) / member_ckpt_name(k)).string();
      if (fs::exists(path)) {
        states[k] = load_checkpoint(path).state;
      } else {
        Sample s = sample_one(manifest.sim, manifest.sampler, manifest.seed,
                              static_cast<std::uint64_t>(k));
        // the burn-in chain is complete; store the stream at a fresh position
        save_checkpoint(path, s.state, RngStream(manifest.seed, s.stream));
        states[k] = std::move(s.state);
      }
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

std::vector<DisplacementRecord> run_member_displacements(
    SystemState state, SimConfig sim, double horizon, double output_interval,
    int member) {
  std::vector<DisplacementRecord> records;
  run_on_grid(state, sim, horizon, output_interval,
              [&](long k, const SystemState& s) {
                DisplacementRecord rec = tracer_displacement(s, member);
                rec.time = k * output_interval;  // exact common grid
                records.push_back(rec);
              });
  return records;
}

DivergenceResult run_trajectory_divergence(const ExperimentManifest& manifest,
                                           const std::string& out_dir) {
  manifest.validate();
  if (manifest.dt_list.size() < 2)
    throw ConfigError("divergence: need at least 2 step sizes");
  for (std::size_t i = 1; i < manifest.dt_list.size(); ++i)
    if (manifest.dt_list[i] > manifest.dt_list[i - 1])
      throw ConfigError("divergence: dt list must be sorted descending");

  DivergenceResult res;
  res.dts = manifest.dt_list;
  const long k_max = std::lround(manifest.horizon / manifest.output_interval);
  res.grid.resize(k_max + 1);
  for (long k = 0; k <= k_max; ++k) res.grid[k] = k * manifest.output_interval;

  // one shared initial condition from the canonical distribution
  SystemState initial =
      ensemble_initial_states(manifest, 1).front();

  const double nan = std::numeric_limits<double>::quiet_NaN();
  res.x.assign(res.dts.size(), std::vector<double>(k_max + 1, nan));
  res.blew_up.assign(res.dts.size(), false);

  for (std::size_t d = 0; d < res.dts.size(); ++d) {
    SimConfig sim = manifest.sim;
    sim.dt = res.dts[d];
    SystemState state = initial;
    double x0 = state.positions[0].x;
    try {
      run_on_grid(state, sim, manifest.horizon, manifest.output_interval,
                  [&](long k, const SystemState& s) {
                    res.x[d][k] = x0 + s.displacement[0].x;
                  });
    } catch (const NumericalError&) {
      res.blew_up[d] = true;  // keep the values recorded so far
    }
  }

  // divergence time of each coarse dt against the finest
  const std::vector<double>& ref = res.x.back();
  res.divergence_time.assign(res.dts.size(), nan);
  for (std::size_t d = 0; d + 1 < res.dts.size(); ++d) {
    for (long k = 0; k <= k_max; ++k) {
      double delta = std::fabs(res.x[d][k] - ref[k]);
      if (std::isfinite(delta) && delta > manifest.divergence_threshold) {
        res.divergence_time[d] = res.grid[k];
        break;
      }
    }
  }

  if (!out_dir.empty()) {
    std::ofstream out = open_csv(out_dir, "divergence.csv", manifest);
    out << "dt,t,x\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d)
      for (long k = 0; k <= k_max; ++k)
        out << format_double(res.dts[d]) << ',' << format_double(res.grid[k])
            << ',' << format_double(res.x[d][k]) << '\n';

    std::ofstream times = open_csv(out_dir, "divergence_times.csv", manifest);
    times << "dt,divergence_time,blew_up\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d)
      times << format_double(res.dts[d]) << ','
            << format_double(res.divergence_time[d]) << ','
            << (res.blew_up[d] ? 1 : 0) << '\n';
  }
  return res;
}

HistogramExperimentResult run_histogram_experiment(
    const ExperimentManifest& manifest, const std::string& out_dir,
    const std::string& checkpoint_dir) {
  manifest.validate();
  if (manifest.dt_list.empty())
    throw ConfigError("histogram: dt list is empty");

  std::vector<SystemState> initial =
      ensemble_initial_states(manifest, manifest.ensemble, checkpoint_dir);

  HistogramExperimentResult res;
  res.dts = manifest.dt_list;
  res.samples.resize(res.dts.size());
  res.failures.assign(res.dts.size(), 0);

  for (std::size_t d = 0; d < res.dts.size(); ++d) {
    SimConfig sim = manifest.sim;
    sim.dt = res.dts[d];
    const long n_steps = steps_per_interval(sim.dt, manifest.horizon);
    std::vector<double> dx(manifest.ensemble,
                           std::numeric_limits<double>::quiet_NaN());
    std::vector<char> failed(manifest.ensemble, 0);

#pragma omp parallel
    {
      ForceWorkspace ws;
      ForceResult scratch;
#pragma omp for schedule(dynamic)
      for (int m = 0; m < manifest.ensemble; ++m) {
        SystemState state = initial[m];
        try {
          for (long s = 0; s < n_steps; ++s)
            verlet_step_inplace(state, sim, ws, scratch);
          dx[m] = state.displacement[0].x;
        } catch (const NumericalError&) {
          failed[m] = 1;
        }
      }
    }

    for (int m = 0; m < manifest.ensemble; ++m) {
      if (failed[m]) {
        ++res.failures[d];
      } else {
        res.samples[d].push_back(dx[m]);
      }
    }
    res.histograms.push_back(make_histogram(res.samples[d], manifest.n_bins,
                                            manifest.hist_lo,
                                            manifest.hist_hi));
  }

  if (!out_dir.empty()) {
    std::ofstream out = open_csv(out_dir, "histogram.csv", manifest);
    out << "dt,bin_index,bin_lo,bin_hi,count,failures\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d) {
      const Histogram& h = res.histograms[d];
      const double inf = std::numeric_limits<double>::infinity();
      out << format_double(res.dts[d]) << ",-1," << format_double(-inf) << ','
          << format_double(h.edges.front()) << ',' << h.underflow << ','
          << res.failures[d] << '\n';
      for (std::size_t b = 0; b < h.counts.size(); ++b)
        out << format_double(res.dts[d]) << ',' << b << ','
            << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1])
            << ',' << h.counts[b] << ',' << res.failures[d] << '\n';
      out << format_double(res.dts[d]) << ',' << h.counts.size() << ','
          << format_double(h.edges.back()) << ',' << format_double(inf) << ','
          << h.overflow << ',' << res.failures[d] << '\n';
    }

    std::ofstream samples = open_csv(out_dir, "histogram_samples.csv",
                                     manifest);
    samples << "dt,member,dx\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d)
      for (std::size_t m = 0; m < res.samples[d].size(); ++m)
        samples << format_double(res.dts[d]) << ',' << m << ','
                << format_double(res.samples[d][m]) << '\n';
  }
  return res;
}

MsdExperimentResult run_msd_experiment(const ExperimentManifest& manifest,
                                       const std::string& out_dir,
                                       const std::string& checkpoint_dir) {
  manifest.validate();
  if (manifest.dt_list.empty()) throw ConfigError("msd: dt list is empty");
  const long k_max = std::lround(manifest.horizon / manifest.output_interval);
  if (k_max > 10000)
    throw ConfigError("msd: observation grid exceeds 10^4 points");

  std::vector<SystemState> initial =
      ensemble_initial_states(manifest, manifest.ensemble, checkpoint_dir);

  MsdExperimentResult res;
  res.dts = manifest.dt_list;
  res.failures.assign(res.dts.size(), 0);

  for (std::size_t d = 0; d < res.dts.size(); ++d) {
    SimConfig sim = manifest.sim;
    sim.dt = res.dts[d];
    std::vector<std::vector<DisplacementRecord>> members(manifest.ensemble);
    std::vector<char> failed(manifest.ensemble, 0);

#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m < manifest.ensemble; ++m) {
      try {
        members[m] = run_member_displacements(initial[m], sim,
                                              manifest.horizon,
                                              manifest.output_interval, m);
      } catch (const NumericalError&) {
        failed[m] = 1;
      }
    }

    std::vector<std::vector<DisplacementRecord>> ok;
    ok.reserve(manifest.ensemble);
    for (int m = 0; m < manifest.ensemble; ++m) {
      if (failed[m]) {
        ++res.failures[d];
      } else {
        ok.push_back(std::move(members[m]));
      }
    }
    res.r2.push_back(msd_series(ok, DispStat::R2));
    res.dx2.push_back(msd_series(ok, DispStat::DX2));
  }

  if (!out_dir.empty()) {
    auto dump = [&](const std::string& name, double t_cap) {
      std::ofstream out = open_csv(out_dir, name, manifest);
      out << "statistic,dt,t,mean,se,n\n";
      for (std::size_t d = 0; d < res.dts.size(); ++d) {
        for (int which = 0; which < 2; ++which) {
          const ObservableSeries& s = which == 0 ? res.r2[d] : res.dx2[d];
          const char* label = which == 0 ? "r2" : "dx2";
          for (std::size_t t = 0; t < s.time.size(); ++t) {
            if (s.time[t] > t_cap) break;
            out << label << ',' << format_double(res.dts[d]) << ','
                << format_double(s.time[t]) << ',' << format_double(s.mean[t])
                << ',' << format_double(s.se[t]) << ',' << s.n_members << '\n';
          }
        }
      }
    };
    dump("msd.csv", std::numeric_limits<double>::infinity());
    dump("msd_zoom.csv", 2.0);  // ballistic-to-diffusive shape is visible here
  }
  return res;
}

EnergyDriftResult run_energy_drift_experiment(
    const ExperimentManifest& manifest, const std::string& out_dir) {
  manifest.validate();
  if (manifest.dt_list.size() < 2)
    throw ConfigError("energy-drift: need at least 2 step sizes");

  SystemState initial = ensemble_initial_states(manifest, 1).front();

  EnergyDriftResult res;
  res.dts = manifest.dt_list;
  const long k_max = std::lround(manifest.horizon / manifest.output_interval);
  res.grid.resize(k_max + 1);
  for (long k = 0; k <= k_max; ++k) res.grid[k] = k * manifest.output_interval;
  res.drift_series.assign(res.dts.size(),
                          std::vector<double>(
                              k_max + 1,
                              std::numeric_limits<double>::quiet_NaN()));
  res.max_drift.assign(res.dts.size(), 0.0);
  res.mean_drift.assign(res.dts.size(), 0.0);
  res.blew_up.assign(res.dts.size(), false);

  for (std::size_t d = 0; d < res.dts.size(); ++d) {
    SimConfig sim = manifest.sim;
    sim.dt = res.dts[d];
    SystemState state = initial;
    double h0 = 0.0;
    double sum = 0.0;
    long count = 0;
    try {
      run_on_grid(state, sim, manifest.horizon, manifest.output_interval,
                  [&](long k, const SystemState& s) {
                    double h = kinetic_energy(s) +
                               compute_forces(s, sim).potential;
                    if (k == 0) h0 = h;
                    double drift = std::fabs(h - h0);
                    res.drift_series[d][k] = drift;
                    res.max_drift[d] = std::max(res.max_drift[d], drift);
                    sum += drift;
                    ++count;
                    if (drift > kBlowUpDrift)
                      throw NumericalError("energy blow-up", k);
                  });
    } catch (const NumericalError&) {
      res.blew_up[d] = true;
    }
    res.mean_drift[d] = count > 0 ? sum / count : 0.0;
  }

  // log-log slope of max drift over the step sizes that survived
  std::vector<double> lx, ly;
  for (std::size_t d = 0; d < res.dts.size(); ++d)
    if (!res.blew_up[d] && res.max_drift[d] > 0) {
      lx.push_back(std::log(res.dts[d]));
      ly.push_back(std::log(res.max_drift[d]));
    }
  res.slope = lx.size() >= 2 ? fit_slope(lx, ly)
                             : std::numeric_limits<double>::quiet_NaN();

  if (!out_dir.empty()) {
    std::ofstream out = open_csv(out_dir, "energy_drift.csv", manifest);
    out << "dt,max_drift,mean_drift,blew_up,loglog_slope\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d)
      out << format_double(res.dts[d]) << ','
          << format_double(res.max_drift[d]) << ','
          << format_double(res.mean_drift[d]) << ',' << (res.blew_up[d] ? 1 : 0)
          << ',' << format_double(res.slope) << '\n';

    std::ofstream series = open_csv(out_dir, "energy_drift_series.csv",
                                    manifest);
    series << "dt,t,abs_drift\n";
    for (std::size_t d = 0; d < res.dts.size(); ++d)
      for (long k = 0; k <= k_max; ++k)
        series << format_double(res.dts[d]) << ','
               << format_double(res.grid[k]) << ','
               << format_double(res.drift_series[d][k]) << '\n';
  }
  return res;
}

ConjectureResult run_conjecture_table(const ExperimentManifest& manifest,
                                      const std::string& out_dir,
                                      const std::string& checkpoint_dir) {
  manifest.validate();
  if (manifest.dt_list.empty())
    throw ConfigError("conjecture: dt list is empty");
  if (manifest.checkpoint_times.empty())
    throw ConfigError("conjecture: checkpoint times are empty");

  std::vector<SystemState> initial =
      ensemble_initial_states(manifest, manifest.ensemble, checkpoint_dir);

  for (std::size_t c = 1; c < manifest.checkpoint_times.size(); ++c)
    if (manifest.checkpoint_times[c] <= manifest.checkpoint_times[c - 1])
      throw ConfigError("conjecture: checkpoint times must be ascending");

  // R^2 per (dt, checkpoint, member); the reference dt rides along last
  std::vector<double> all_dts = manifest.dt_list;
  all_dts.push_back(manifest.ref_dt);
  const std::size_t n_cp = manifest.checkpoint_times.size();

  ConjectureResult res;
  std::vector<std::vector<std::vector<double>>> r2(
      all_dts.size(), std::vector<std::vector<double>>(n_cp));

  for (std::size_t d = 0; d < all_dts.size(); ++d) {
    SimConfig sim = manifest.sim;
    sim.dt = all_dts[d];
    std::vector<long> cp_steps(n_cp);
    for (std::size_t c = 0; c < n_cp; ++c)
      cp_steps[c] = steps_per_interval(sim.dt, manifest.checkpoint_times[c]);

    std::vector<std::vector<double>> member_r2(
        manifest.ensemble,
        std::vector<double>(n_cp, std::numeric_limits<double>::quiet_NaN()));
    std::vector<char> failed(manifest.ensemble, 0);

#pragma omp parallel
    {
      ForceWorkspace ws;
      ForceResult scratch;
#pragma omp for schedule(dynamic)
      for (int m = 0; m < manifest.ensemble; ++m) {
        SystemState state = initial[m];
        try {
          long step = 0;
          for (std::size_t c = 0; c < n_cp; ++c) {
            for (; step < cp_steps[c]; ++step)
              verlet_step_inplace(state, sim, ws, scratch);
            member_r2[m][c] = state.displacement[0].norm2();
          }
        } catch (const NumericalError&) {
          failed[m] = 1;
        }
      }
    }

    for (int m = 0; m < manifest.ensemble; ++m) {
      if (failed[m]) {
        ++res.failures;
        continue;
      }
      for (std::size_t c = 0; c < n_cp; ++c)
        r2[d][c].push_back(member_r2[m][c]);
    }
  }

  const std::size_t ref = all_dts.size() - 1;
  for (std::size_t d = 0; d + 1 < all_dts.size(); ++d) {
    for (std::size_t c = 0; c < n_cp; ++c) {
      auto [mc, sec] = mean_se(r2[d][c]);
      auto [mr, ser] = mean_se(r2[ref][c]);
      ConjectureEntry e;
      e.dt = all_dts[d];
      e.T = manifest.checkpoint_times[c];
      e.mean_coarse = mc;
      e.mean_ref = mr;
      e.diff = std::fabs(mc - mr);
      e.combined_se = std::sqrt(sec * sec + ser * ser);
      e.diff_over_dt2 = e.diff / (e.dt * e.dt);
      res.entries.push_back(e);
    }
  }

  if (!out_dir.empty()) {
    std::ofstream out = open_csv(out_dir, "conjecture.csv", manifest);
    out << "dt,T,mean_coarse,mean_ref,diff,combined_se,diff_over_dt2\n";
    for (const ConjectureEntry& e : res.entries)
      out << format_double(e.dt) << ',' << format_double(e.T) << ','
          << format_double(e.mean_coarse) << ',' << format_double(e.mean_ref)
          << ',' << format_double(e.diff) << ','
          << format_double(e.combined_se) << ','
          << format_double(e.diff_over_dt2) << '\n';
  }
  return res;
}

}  // namespace ljmd
