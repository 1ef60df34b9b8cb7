#pragma once

#include <span>
#include <vector>

#include "ljmd/errors.hpp"
#include "ljmd/state.hpp"

namespace ljmd {

// Unwrapped tracer displacement at one instant; R is the Euclidean norm.
struct DisplacementRecord {
  int member = 0;
  double time = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double r = 0.0;
};

// Pointwise ensemble statistics on a strictly increasing time grid.
struct ObservableSeries {
  std::vector<double> time;
  std::vector<double> mean;
  std::vector<double> se;   // sample standard deviation / sqrt(N)
  int n_members = 0;
};

struct Histogram {
  std::vector<double> edges;  // uniform, size n_bins + 1
  std::vector<long> counts;
  long underflow = 0;
  long overflow = 0;
  long total = 0;
};

enum class DispStat { R2, DX2 };

// Reads the unwrapped displacement accumulator of particle 0 (never the
// wrapped positions).
DisplacementRecord tracer_displacement(const SystemState& state,
                                       int member = 0);

// Pointwise ensemble mean and standard error of R^2 or dx^2 over members.
// All member record sequences must share the identical time grid.
ObservableSeries msd_series(
    const std::vector<std::vector<DisplacementRecord>>& members,
    DispStat statistic);

// Uniform bins over [lo, hi); values outside land in underflow/overflow
// (a value exactly at hi overflows). Empty input is a histogram of zeros.
Histogram make_histogram(std::span<const double> values, int n_bins,
                         double lo, double hi);

struct SeriesDifference {
  std::vector<double> time;
  std::vector<double> diff;         // mean_a - mean_b
  std::vector<double> combined_se;  // sqrt(se_a^2 + se_b^2)
  std::vector<double> z;            // diff / combined_se; 0 when both vanish
};

SeriesDifference series_difference(const ObservableSeries& a,
                                   const ObservableSeries& b);

}  // namespace ljmd
