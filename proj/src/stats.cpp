#include "ljmd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ljmd/errors.hpp"

namespace ljmd {

namespace {

double mean_of(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  return m / xs.size();
}

double central_moment(std::span<const double> xs, double mean, int k) {
  double m = 0.0;
  for (double x : xs) m += std::pow(x - mean, k);
  return m / xs.size();
}

}  // namespace

std::pair<double, double> mean_se(std::span<const double> xs) {
  if (xs.size() < 2) throw StatsError("mean_se: need at least 2 values");
  double mean = mean_of(xs);
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= (xs.size() - 1);
  return {mean, std::sqrt(var / xs.size())};
}

double skewness(std::span<const double> xs) {
  if (xs.size() < 3) throw StatsError("skewness: too few values");
  double mean = mean_of(xs);
  double m2 = central_moment(xs, mean, 2);
  double m3 = central_moment(xs, mean, 3);
  return m3 / std::pow(m2, 1.5);
}

double excess_kurtosis(std::span<const double> xs) {
  if (xs.size() < 4) throw StatsError("excess_kurtosis: too few values");
  double mean = mean_of(xs);
  double m2 = central_moment(xs, mean, 2);
  double m4 = central_moment(xs, mean, 4);
  return m4 / (m2 * m2) - 3.0;
}

double correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw StatsError("correlation: bad sample sizes");
  double mx = mean_of(xs), my = mean_of(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw StatsError("fit_slope: bad sample sizes");
  double mx = mean_of(x), my = mean_of(y);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw StatsError("ks_statistic: empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= v) ++i;
    while (j < sb.size() && sb[j] <= v) ++j;
    double fa = static_cast<double>(i) / sa.size();
    double fb = static_cast<double>(j) / sb.size();
    d = std::max(d, std::fabs(fa - fb));
  }
  return d;
}

double ks_critical(double alpha, std::size_t n, std::size_t m) {
  double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  return c * std::sqrt(static_cast<double>(n + m) /
                       (static_cast<double>(n) * static_cast<double>(m)));
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

}  // namespace ljmd
