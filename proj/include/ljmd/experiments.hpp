#pragma once

#include <string>
#include <vector>

#include "ljmd/manifest.hpp"
#include "ljmd/observables.hpp"

namespace ljmd {

// Shared canonical initial states for an ensemble, ordered by member index.
// Member k always comes from RNG stream k of manifest.seed, so two
// experiments (or two step sizes) with the same manifest seed start every
// member from the bit-identical state. When checkpoint_dir is non-empty,
// states are loaded from member_<k>.ckpt files if present, otherwise
// sampled and saved there (resumable ensembles).
std::vector<SystemState> ensemble_initial_states(
    const ExperimentManifest& manifest, int count,
    const std::string& checkpoint_dir = "");

// Tracer displacement records for one member on the common output grid
// t_k = k * output_interval, k = 0 .. round(horizon / output_interval).
// output_interval must be an integer multiple of dt.
std::vector<DisplacementRecord> run_member_displacements(
    SystemState state, SimConfig sim, double horizon, double output_interval,
    int member);

struct DivergenceResult {
  std::vector<double> grid;             // common times, every output_interval
  std::vector<double> dts;              // as in manifest, descending
  std::vector<std::vector<double>> x;   // per dt: tracer x on the grid
  std::vector<bool> blew_up;            // per dt
  std::vector<double> divergence_time;  // per coarse dt vs finest; NaN = none
};

// Fig. 2 style study: one shared initial condition, x-position of the
// tracer versus time for each step size, plus the first time the coarse
// curve departs from the finest one by more than divergence_threshold.
DivergenceResult run_trajectory_divergence(const ExperimentManifest& manifest,
                                           const std::string& out_dir);

struct HistogramExperimentResult {
  std::vector<double> dts;
  std::vector<std::vector<double>> samples;  // per dt: tracer dx at horizon
  std::vector<Histogram> histograms;
  std::vector<int> failures;  // per dt: members excluded after blow-up
};

// Fig. 3 style study: N members integrated to the horizon per step size,
// histogram of the signed x-displacement of the tracer.
HistogramExperimentResult run_histogram_experiment(
    const ExperimentManifest& manifest, const std::string& out_dir,
    const std::string& checkpoint_dir = "");

struct MsdExperimentResult {
  std::vector<double> dts;
  std::vector<ObservableSeries> r2;   // per dt
  std::vector<ObservableSeries> dx2;  // per dt
  std::vector<int> failures;
};

// Figs. 4-5 style study: ensemble mean squared displacement versus time per
// step size, common member seeds across step sizes, both the vector-norm
// and the x-only statistic. Also writes a zoomed export on [0, 2].
MsdExperimentResult run_msd_experiment(const ExperimentManifest& manifest,
                                       const std::string& out_dir,
                                       const std::string& checkpoint_dir = "");

struct EnergyDriftResult {
  std::vector<double> dts;
  std::vector<double> max_drift;   // max |H(t) - H(0)| over the run
  std::vector<double> mean_drift;
  std::vector<bool> blew_up;
  std::vector<double> grid;
  std::vector<std::vector<double>> drift_series;  // per dt, on the grid
  double slope = 0.0;  // log-log fit of max drift vs dt (non-blow-up rows)
};

// Energy conservation scaling: shared initial condition, |H(t) - H(0)| per
// step size, log-log slope of the max drift.
EnergyDriftResult run_energy_drift_experiment(
    const ExperimentManifest& manifest, const std::string& out_dir);

struct ConjectureEntry {
  double dt = 0.0;
  double T = 0.0;
  double mean_coarse = 0.0;
  double mean_ref = 0.0;
  double diff = 0.0;         // |mean_coarse - mean_ref|
  double combined_se = 0.0;
  double diff_over_dt2 = 0.0;
};

struct ConjectureResult {
  std::vector<ConjectureEntry> entries;  // dt-major, checkpoint-time-minor
  int failures = 0;
};

// Weak-convergence table: |<R^2_dt(T)> - <R^2_ref(T)>| at the checkpoint
// times, per coarse step size, with common member seeds across all runs.
ConjectureResult run_conjecture_table(const ExperimentManifest& manifest,
                                      const std::string& out_dir,
                                      const std::string& checkpoint_dir = "");

}  // namespace ljmd
