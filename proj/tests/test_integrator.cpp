#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ljmd/integrator.hpp"

using namespace ljmd;

namespace {

SystemState two_body(double separation, Vec2 v0 = {}, Vec2 v1 = {}) {
  SystemState s = SystemState::zeros(2);
  s.positions = {{4.0, 5.0}, {4.0 + separation, 5.0}};
  s.velocities = {v0, v1};
  return s;
}

}  // namespace

TEST_CASE("free drift moves positions, not velocities") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState s = SystemState::zeros(2);
  s.positions = {{1.0, 1.0}, {8.0, 8.0}};
  s.velocities[0] = {1.0, 0.0};
  SystemState next = verlet_step(s, cfg);
  CHECK(next.positions[0].x == doctest::Approx(1.01).epsilon(1e-15));
  CHECK(next.velocities[0].x == 1.0);
  CHECK(next.displacement[0].x == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(next.time == doctest::Approx(0.01));
}

TEST_CASE("pair at the minimum is a fixed point") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState s = two_body(std::pow(2.0, 1.0 / 6.0));
  SystemState next = verlet_step(s, cfg);
  for (int i = 0; i < 2; ++i) {
    CHECK(next.positions[i].x ==
          doctest::Approx(s.positions[i].x).epsilon(1e-12));
    CHECK(std::fabs(next.velocities[i].x) < 1e-12);
  }
}

TEST_CASE("time reversal returns the initial state") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.001;
  SystemState s = two_body(1.2, {0.05, 0.02}, {-0.05, -0.02});
  SystemState fwd = s;
  for (int k = 0; k < 100; ++k) fwd = verlet_step(fwd, cfg);
  for (Vec2& v : fwd.velocities) v = -v;
  for (int k = 0; k < 100; ++k) fwd = verlet_step(fwd, cfg);
  for (Vec2& v : fwd.velocities) v = -v;
  for (int i = 0; i < 2; ++i) {
    CHECK(fwd.positions[i].x == doctest::Approx(s.positions[i].x).epsilon(1e-9));
    CHECK(fwd.positions[i].y == doctest::Approx(s.positions[i].y).epsilon(1e-9));
    CHECK(fwd.velocities[i].x ==
          doctest::Approx(s.velocities[i].x).epsilon(1e-9));
    CHECK(fwd.velocities[i].y ==
          doctest::Approx(s.velocities[i].y).epsilon(1e-9));
  }
}

TEST_CASE("total velocity is invariant across a step") {
  SimConfig cfg;
  cfg.n_particles = 12;
  cfg.dt = 0.005;
  SystemState s = SystemState::zeros(12);
  for (int i = 0; i < 12; ++i) {
    s.positions[i] = {0.5 + 2.7 * (i % 4), 0.5 + 2.9 * (i / 4)};
    s.velocities[i] = {std::sin(i * 1.7), std::cos(i * 0.9)};
  }
  Vec2 before;
  for (const Vec2& v : s.velocities) before += v;
  SystemState next = verlet_step(s, cfg);
  Vec2 after;
  for (const Vec2& v : next.velocities) after += v;
  CHECK(std::fabs(after.x - before.x) < 1e-12);
  CHECK(std::fabs(after.y - before.y) < 1e-12);
}

TEST_CASE("one step preserves phase-space volume (det J = 1)") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState base = two_body(1.3, {0.1, -0.05}, {-0.02, 0.08});

  // flatten (q, p) -> verlet -> (q', p'); displacement is not part of the map
  auto apply = [&](const std::vector<double>& in) {
    SystemState s = base;
    for (int i = 0; i < 2; ++i) {
      s.positions[i] = {in[4 * i], in[4 * i + 1]};
      s.velocities[i] = {in[4 * i + 2], in[4 * i + 3]};
    }
    SystemState n = verlet_step(s, cfg);
    std::vector<double> out(8);
    for (int i = 0; i < 2; ++i) {
      out[4 * i] = n.positions[i].x;
      out[4 * i + 1] = n.positions[i].y;
      out[4 * i + 2] = n.velocities[i].x;
      out[4 * i + 3] = n.velocities[i].y;
    }
    return out;
  };

  std::vector<double> x0(8);
  for (int i = 0; i < 2; ++i) {
    x0[4 * i] = base.positions[i].x;
    x0[4 * i + 1] = base.positions[i].y;
    x0[4 * i + 2] = base.velocities[i].x;
    x0[4 * i + 3] = base.velocities[i].y;
  }

  const double h = 1e-6;
  double jac[8][8];
  for (int c = 0; c < 8; ++c) {
    std::vector<double> xp = x0, xm = x0;
    xp[c] += h;
    xm[c] -= h;
    std::vector<double> fp = apply(xp), fm = apply(xm);
    for (int r = 0; r < 8; ++r) jac[r][c] = (fp[r] - fm[r]) / (2.0 * h);
  }

  // determinant by Gaussian elimination with partial pivoting
  double det = 1.0;
  for (int c = 0; c < 8; ++c) {
    int pivot = c;
    for (int r = c + 1; r < 8; ++r)
      if (std::fabs(jac[r][c]) > std::fabs(jac[pivot][c])) pivot = r;
    if (pivot != c) {
      for (int k = 0; k < 8; ++k) std::swap(jac[c][k], jac[pivot][k]);
      det = -det;
    }
    det *= jac[c][c];
    for (int r = c + 1; r < 8; ++r) {
      double m = jac[r][c] / jac[c][c];
      for (int k = c; k < 8; ++k) jac[r][k] -= m * jac[c][k];
    }
  }
  CHECK(det == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("integrate observation fenceposts") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState s = SystemState::zeros(2);
  s.positions = {{1.0, 1.0}, {8.0, 8.0}};

  std::vector<StepObservation> obs;
  auto sink = [&](const StepObservation& o) { obs.push_back(o); };

  SUBCASE("zero steps still observes the initial state") {
    integrate(s, cfg, 0, 10, sink);
    CHECK(obs.size() == 1);
    CHECK(obs[0].step == 0);
  }
  SUBCASE("100 steps every 10 gives 11 observations") {
    integrate(s, cfg, 100, 10, sink);
    CHECK(obs.size() == 11);
    CHECK(obs.back().step == 100);
    CHECK(obs.back().time == doctest::Approx(1.0));
  }
}

TEST_CASE("blow-up carries the failing step index") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.dt = 0.01;
  SystemState s = SystemState::zeros(2);
  // near-overlap: the first force evaluation overflows to inf
  s.positions = {{1.0, 1.0}, {1.0 + 1e-80, 1.0}};
  try {
    integrate(s, cfg, 10, 1);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.step == 1);
  }
}
