#include "ljmd/observables.hpp"

#include <cmath>

namespace ljmd {

DisplacementRecord tracer_displacement(const SystemState& state, int member) {
  if (state.size() < 1)
    throw StatsError("tracer_displacement: empty state");
  DisplacementRecord rec;
  rec.member = member;
  rec.time = state.time;
  rec.dx = state.displacement[0].x;
  rec.dy = state.displacement[0].y;
  rec.r = std::hypot(rec.dx, rec.dy);
  return rec;
}

ObservableSeries msd_series(
    const std::vector<std::vector<DisplacementRecord>>& members,
    DispStat statistic) {
  const std::size_t n = members.size();
  if (n < 2) throw StatsError("msd_series: need at least 2 members");
  const std::size_t n_times = members[0].size();
  for (const auto& m : members) {
    if (m.size() != n_times)
      throw AlignmentError("msd_series: member grids differ in length");
    for (std::size_t t = 0; t < n_times; ++t)
      if (m[t].time != members[0][t].time)
        throw AlignmentError("msd_series: member time grids differ");
  }

  ObservableSeries out;
  out.n_members = static_cast<int>(n);
  out.time.resize(n_times);
  out.mean.resize(n_times);
  out.se.resize(n_times);
  for (std::size_t t = 0; t < n_times; ++t) {
    out.time[t] = members[0][t].time;
    double mean = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const DisplacementRecord& r = members[k][t];
      double v = statistic == DispStat::R2 ? r.dx * r.dx + r.dy * r.dy
                                           : r.dx * r.dx;
      mean += v;
    }
    mean /= n;
    double var = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const DisplacementRecord& r = members[k][t];
      double v = statistic == DispStat::R2 ? r.dx * r.dx + r.dy * r.dy
                                           : r.dx * r.dx;
      var += (v - mean) * (v - mean);
    }
    var /= (n - 1);
    out.mean[t] = mean;
    out.se[t] = std::sqrt(var / n);
  }
  return out;
}

Histogram make_histogram(std::span<const double> values, int n_bins,
                         double lo, double hi) {
  if (n_bins < 1) throw ConfigError("make_histogram: n_bins must be >= 1");
  if (!(lo < hi)) throw ConfigError("make_histogram: need lo < hi");
  Histogram h;
  h.edges.resize(n_bins + 1);
  double width = (hi - lo) / n_bins;
  for (int b = 0; b <= n_bins; ++b) h.edges[b] = lo + b * width;
  h.edges[n_bins] = hi;
  h.counts.assign(n_bins, 0);
  for (double v : values) {
    ++h.total;
    if (v < lo) {
      ++h.underflow;
    } else if (v >= hi) {
      ++h.overflow;
    } else {
      int b = static_cast<int>((v - lo) / width);
      if (b >= n_bins) b = n_bins - 1;  // edge rounding
      ++h.counts[b];
    }
  }
  return h;
}

SeriesDifference series_difference(const ObservableSeries& a,
                                   const ObservableSeries& b) {
  if (a.time != b.time)
    throw AlignmentError("series_difference: time grids differ");
  SeriesDifference out;
  out.time = a.time;
  const std::size_t n = a.time.size();
  out.diff.resize(n);
  out.combined_se.resize(n);
  out.z.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.diff[t] = a.mean[t] - b.mean[t];
    out.combined_se[t] = std::sqrt(a.se[t] * a.se[t] + b.se[t] * b.se[t]);
    out.z[t] = (out.combined_se[t] == 0.0 && out.diff[t] == 0.0)
                   ? 0.0
                   : out.diff[t] / out.combined_se[t];
  }
  return out;
}

}  // namespace ljmd
