// Command-line harness for the 2-D truncated Lennard-Jones experiments.
//
// Subcommands: sample, divergence, histogram, msd, energy-drift, conjecture.
// Exit codes: 0 success, 1 configuration error, 2 numerical failure
// (blow-up), 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "ljmd/checkpoint.hpp"
#include "ljmd/experiments.hpp"

namespace fs = std::filesystem;
using namespace ljmd;

namespace {

struct CommonOpts {
  std::string config_file;
  std::string out_dir = "out";
  std::string checkpoint_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = 0;
  std::vector<double> dt_list;
  int ensemble = -1;
  double horizon = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_file,
                  "manifest file (key=value lines)");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--checkpoints", o.checkpoint_dir,
                  "directory for member checkpoints (resumable ensembles)");
  cmd->add_option("--seed", o.seed, "root RNG seed")
      ->each([&](const std::string&) { o.seed_set = true; });
  cmd->add_option("--workers", o.workers, "worker thread count (0 = default)");
  cmd->add_option("--dt", o.dt_list, "step-size list")->delimiter(',');
  cmd->add_option("--ensemble", o.ensemble, "ensemble size N");
  cmd->add_option("--horizon", o.horizon, "time horizon T");
}

ExperimentManifest build_manifest(const CommonOpts& o,
                                  const std::string& experiment) {
  ExperimentManifest m;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw IoError("cannot open config file: " + o.config_file);
    std::stringstream ss;
    ss << in.rdbuf();
    m = ExperimentManifest::parse(ss.str());
  }
  m.experiment = experiment;
  if (o.seed_set) m.seed = o.seed;
  if (!o.dt_list.empty()) m.dt_list = o.dt_list;
  if (o.ensemble > 0) m.ensemble = o.ensemble;
  if (o.horizon > 0) m.horizon = o.horizon;
  m.sim.seed = m.seed;
  if (o.workers > 0) {
#ifdef _OPENMP
    omp_set_num_threads(o.workers);
#endif
  }
  return m;
}

// True when neither a config file nor --horizon pinned the horizon, so the
// per-experiment default applies.
bool horizon_unset(const CommonOpts& o) {
  return o.config_file.empty() && o.horizon <= 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D truncated Lennard-Jones self-diffusion experiments"};
  app.require_subcommand(1);

  CommonOpts sample_o, div_o, hist_o, msd_o, drift_o, conj_o;
  int sample_count = 1;

  CLI::App* sample = app.add_subcommand(
      "sample", "draw canonical initial conditions, write checkpoints");
  add_common(sample, sample_o);
  sample->add_option("--count", sample_count, "number of samples");

  CLI::App* divergence = app.add_subcommand(
      "divergence", "tracer x-position vs time across step sizes");
  add_common(divergence, div_o);

  CLI::App* histogram = app.add_subcommand(
      "histogram", "tracer x-displacement histogram at the horizon");
  add_common(histogram, hist_o);

  CLI::App* msd = app.add_subcommand(
      "msd", "ensemble mean squared displacement vs time");
  add_common(msd, msd_o);

  CLI::App* drift = app.add_subcommand(
      "energy-drift", "energy conservation scaling across step sizes");
  add_common(drift, drift_o);

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "weak-convergence difference table");
  add_common(conjecture, conj_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) {
      ExperimentManifest m = build_manifest(sample_o, "sample");
      m.validate();
      std::vector<Sample> samples =
          sample_canonical(m.sim, m.sampler, sample_count, m.seed);
      fs::create_directories(sample_o.out_dir);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "member_%05zu.ckpt", k);
        RngStream rng(m.seed, samples[k].stream);
        save_checkpoint((fs::path(sample_o.out_dir) / name).string(),
                        samples[k].state, rng);
      }
      std::ofstream manifest_out(fs::path(sample_o.out_dir) / "manifest.txt");
      manifest_out << m.serialize();
      std::printf("wrote %zu samples to %s\n", samples.size(),
                  sample_o.out_dir.c_str());
    } else if (*divergence) {
      ExperimentManifest m = build_manifest(div_o, "divergence");
      if (m.dt_list.empty()) m.dt_list = {0.01, 0.001, 0.0001, 0.00001};
      if (horizon_unset(div_o)) m.horizon = 5.0;
      if (div_o.config_file.empty()) m.output_interval = 0.01;
      DivergenceResult r = run_trajectory_divergence(m, div_o.out_dir);
      for (std::size_t d = 0; d + 1 < r.dts.size(); ++d)
        std::printf("dt=%g divergence_time=%g%s\n", r.dts[d],
                    r.divergence_time[d], r.blew_up[d] ? " (blew up)" : "");
    } else if (*histogram) {
      ExperimentManifest m = build_manifest(hist_o, "histogram");
      if (m.dt_list.empty()) m.dt_list = {0.01, 0.005, 0.0025};
      if (horizon_unset(hist_o)) m.horizon = 10.0;
      HistogramExperimentResult r =
          run_histogram_experiment(m, hist_o.out_dir, hist_o.checkpoint_dir);
      for (std::size_t d = 0; d < r.dts.size(); ++d)
        std::printf("dt=%g members=%zu failures=%d\n", r.dts[d],
                    r.samples[d].size(), r.failures[d]);
      for (int f : r.failures)
        if (f > 0) return 2;
    } else if (*msd) {
      ExperimentManifest m = build_manifest(msd_o, "msd");
      if (m.dt_list.empty()) m.dt_list = {0.01, 0.005, 0.0025};
      MsdExperimentResult r =
          run_msd_experiment(m, msd_o.out_dir, msd_o.checkpoint_dir);
      for (std::size_t d = 0; d < r.dts.size(); ++d)
        std::printf("dt=%g grid_points=%zu failures=%d\n", r.dts[d],
                    r.r2[d].time.size(), r.failures[d]);
      for (int f : r.failures)
        if (f > 0) return 2;
    } else if (*drift) {
      ExperimentManifest m = build_manifest(drift_o, "energy-drift");
      if (m.dt_list.empty()) m.dt_list = {0.01, 0.005, 0.0025};
      EnergyDriftResult r = run_energy_drift_experiment(m, drift_o.out_dir);
      for (std::size_t d = 0; d < r.dts.size(); ++d)
        std::printf("dt=%g max_drift=%g%s\n", r.dts[d], r.max_drift[d],
                    r.blew_up[d] ? " (blew up)" : "");
      std::printf("loglog_slope=%g\n", r.slope);
      for (bool b : r.blew_up)
        if (b) return 2;
    } else if (*conjecture) {
      ExperimentManifest m = build_manifest(conj_o, "conjecture");
      if (m.dt_list.empty()) m.dt_list = {0.02, 0.01, 0.005};
      ConjectureResult r =
          run_conjecture_table(m, conj_o.out_dir, conj_o.checkpoint_dir);
      for (const ConjectureEntry& e : r.entries)
        std::printf("dt=%g T=%g diff=%g +- %g diff/dt^2=%g\n", e.dt, e.T,
                    e.diff, e.combined_se, e.diff_over_dt2);
      if (r.failures > 0) return 2;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
