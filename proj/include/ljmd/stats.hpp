#pragma once

#include <span>
#include <utility>

namespace ljmd {

// Sample mean and standard error of the mean (sd / sqrt(N)).
std::pair<double, double> mean_se(std::span<const double> xs);

double skewness(std::span<const double> xs);
double excess_kurtosis(std::span<const double> xs);

// Pearson correlation of two equal-length samples.
double correlation(std::span<const double> xs, std::span<const double> ys);

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

// Two-sample Kolmogorov-Smirnov statistic (max ECDF distance).
double ks_statistic(std::span<const double> a, std::span<const double> b);

// KS critical value at level alpha for two samples of sizes n and m:
// c(alpha) * sqrt((n + m) / (n m)), c = sqrt(-ln(alpha/2) / 2).
double ks_critical(double alpha, std::size_t n, std::size_t m);

double normal_cdf(double x);

}  // namespace ljmd
