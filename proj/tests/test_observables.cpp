#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ljmd/geometry.hpp"
#include "ljmd/integrator.hpp"
#include "ljmd/observables.hpp"
#include "ljmd/rng.hpp"
#include "ljmd/stats.hpp"

using namespace ljmd;

TEST_CASE("tracer_displacement reads the unwrapped accumulator") {
  SystemState s = SystemState::zeros(3);
  SUBCASE("fresh state") {
    DisplacementRecord r = tracer_displacement(s);
    CHECK(r.dx == 0.0);
    CHECK(r.r == 0.0);
  }
  SUBCASE("3-4-5") {
    s.displacement[0] = {3.0, 4.0};
    DisplacementRecord r = tracer_displacement(s);
    CHECK(r.r == doctest::Approx(5.0).epsilon(1e-15));
  }
}

TEST_CASE("free flight unwraps past the box edge") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState s = SystemState::zeros(2);
  s.positions = {{1.0, 1.0}, {8.0, 8.0}};
  s.velocities[0] = {1.0, 0.0};
  double x_start = s.positions[0].x;
  SystemState end = integrate(s, cfg, 2000, 2000);  // T = 20 > L
  DisplacementRecord r = tracer_displacement(end);
  CHECK(r.dx == doctest::Approx(20.0).epsilon(1e-9));
  // the wrapped position came back around
  CHECK(end.positions[0].x ==
        doctest::Approx(wrap_coord(x_start + 20.0, cfg.box_edge)).epsilon(1e-9));
}

TEST_CASE("wrapped position equals initial + displacement mod L") {
  SimConfig cfg;
  cfg.n_particles = 9;
  cfg.box_edge = 5.75;
  cfg.dt = 0.005;
  SystemState s = SystemState::zeros(9);
  RngStream rng(6, 0);
  for (int i = 0; i < 9; ++i) {
    s.positions[i] = {0.4 + 1.8 * (i % 3), 0.4 + 1.8 * (i / 3)};
    s.velocities[i] = {rng.normal(), rng.normal()};
  }
  std::vector<Vec2> q0 = s.positions;
  SystemState end = integrate(s, cfg, 2000, 2000);
  for (int i = 0; i < 9; ++i) {
    double expect =
        wrap_coord(q0[i].x + end.displacement[i].x, cfg.box_edge);
    CHECK(end.positions[i].x == doctest::Approx(expect).epsilon(1e-9));
  }
}

namespace {

std::vector<std::vector<DisplacementRecord>> synthetic_members(
    int n_members, int n_times, double spread, RngStream& rng) {
  std::vector<std::vector<DisplacementRecord>> members(n_members);
  for (int m = 0; m < n_members; ++m) {
    for (int t = 0; t < n_times; ++t) {
      DisplacementRecord r;
      r.member = m;
      r.time = 0.1 * t;
      r.dx = t == 0 ? 0.0 : 1.0 + spread * rng.normal();
      r.dy = t == 0 ? 0.0 : -0.5 + spread * rng.normal();
      r.r = std::hypot(r.dx, r.dy);
      members[m].push_back(r);
    }
  }
  return members;
}

}  // namespace

TEST_CASE("msd_series basics") {
  RngStream rng(11, 0);
  SUBCASE("identical members have zero standard error") {
    auto members = synthetic_members(5, 4, 0.0, rng);
    ObservableSeries s = msd_series(members, DispStat::R2);
    for (double se : s.se) CHECK(se == 0.0);
    CHECK(s.mean[0] == 0.0);  // T = 0
    CHECK(s.n_members == 5);
  }
  SUBCASE("R2 series equals dx2 + dy2 series pointwise") {
    auto members = synthetic_members(20, 6, 0.3, rng);
    ObservableSeries r2 = msd_series(members, DispStat::R2);
    ObservableSeries dx2 = msd_series(members, DispStat::DX2);
    // dy2 via mirrored records
    auto swapped = members;
    for (auto& m : swapped)
      for (auto& rec : m) std::swap(rec.dx, rec.dy);
    ObservableSeries dy2 = msd_series(swapped, DispStat::DX2);
    for (std::size_t t = 0; t < r2.time.size(); ++t)
      CHECK(r2.mean[t] ==
            doctest::Approx(dx2.mean[t] + dy2.mean[t]).epsilon(1e-12));
  }
  SUBCASE("mismatched grids raise") {
    auto members = synthetic_members(3, 4, 0.1, rng);
    members[2][1].time += 1e-3;
    CHECK_THROWS_AS(msd_series(members, DispStat::R2), AlignmentError);
  }
  SUBCASE("fewer than 2 members raise") {
    auto members = synthetic_members(1, 4, 0.1, rng);
    CHECK_THROWS_AS(msd_series(members, DispStat::R2), StatsError);
  }
}

TEST_CASE("standard error halves when N quadruples") {
  RngStream rng(13, 0);
  auto many = synthetic_members(400, 2, 1.0, rng);
  auto few = decltype(many)(many.begin(), many.begin() + 100);
  ObservableSeries s_many = msd_series(many, DispStat::DX2);
  ObservableSeries s_few = msd_series(few, DispStat::DX2);
  double ratio = s_few.se[1] / s_many.se[1];
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("make_histogram") {
  SUBCASE("single value in a single bin") {
    std::vector<double> v{0.5};
    Histogram h = make_histogram(v, 1, 0.0, 1.0);
    CHECK(h.counts[0] == 1);
    CHECK(h.total == 1);
  }
  SUBCASE("value at hi overflows (half-open bins)") {
    std::vector<double> v{1.0};
    Histogram h = make_histogram(v, 4, 0.0, 1.0);
    CHECK(h.overflow == 1);
    long in_bins = 0;
    for (long c : h.counts) in_bins += c;
    CHECK(in_bins == 0);
  }
  SUBCASE("empty input is a histogram of zeros") {
    std::vector<double> v;
    Histogram h = make_histogram(v, 3, 0.0, 1.0);
    CHECK(h.total == 0);
    for (long c : h.counts) CHECK(c == 0);
  }
  SUBCASE("counts conserve the total") {
    std::vector<double> v{-5.0, 0.1, 0.2, 0.3, 7.0, 0.9};
    Histogram h = make_histogram(v, 5, 0.0, 1.0);
    long sum = h.underflow + h.overflow;
    for (long c : h.counts) sum += c;
    CHECK(sum == h.total);
    CHECK(h.total == 6);
  }
}

TEST_CASE("histogram of normal draws matches CDF differences") {
  RngStream rng(21, 0);
  const int n = 10000;
  std::vector<double> xs(n);
  for (double& x : xs) x = rng.normal();
  Histogram h = make_histogram(xs, 20, -4.0, 4.0);
  for (int b = 0; b < 20; ++b) {
    double p = normal_cdf(h.edges[b + 1]) - normal_cdf(h.edges[b]);
    double expected = n * p;
    CHECK(std::fabs(h.counts[b] - expected) <=
          4.0 * std::sqrt(std::max(expected, 1.0)));
  }
}

TEST_CASE("series_difference") {
  RngStream rng(17, 0);
  auto members = synthetic_members(50, 3, 0.5, rng);
  ObservableSeries a = msd_series(members, DispStat::R2);

  SUBCASE("identical series differ by zero") {
    SeriesDifference d = series_difference(a, a);
    for (double x : d.diff) CHECK(x == 0.0);
    CHECK(d.z[0] == 0.0);  // SE = 0 and diff = 0 at T = 0
  }
  SUBCASE("shift of 10 standard errors gives z near 10") {
    ObservableSeries b = a;
    for (std::size_t t = 1; t < b.time.size(); ++t)
      b.mean[t] += 10.0 * b.se[t];
    SeriesDifference d = series_difference(b, a);
    for (std::size_t t = 1; t < d.time.size(); ++t)
      CHECK(d.z[t] == doctest::Approx(10.0 / std::sqrt(2.0)).epsilon(1e-9));
  }
  SUBCASE("grid mismatch raises") {
    ObservableSeries b = a;
    b.time[1] += 1e-6;
    CHECK_THROWS_AS(series_difference(a, b), AlignmentError);
  }
}
