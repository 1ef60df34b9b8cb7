#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ljmd/forces.hpp"
#include "ljmd/geometry.hpp"
#include "ljmd/integrator.hpp"
#include "ljmd/sampler.hpp"
#include "ljmd/stats.hpp"

using namespace ljmd;

TEST_CASE("lattice_init geometry") {
  SUBCASE("reference system: 10x10 grid at spacing 1.15") {
    SimConfig cfg;
    SystemState s = lattice_init(cfg);
    CHECK(s.size() == 100);
    CHECK(s.positions[1].x == doctest::Approx(1.15));
    CHECK(s.positions[10].y == doctest::Approx(1.15));
    double min_d2 = 1e300;
    for (int i = 0; i < 100; ++i)
      for (int j = i + 1; j < 100; ++j) {
        Vec2 d = min_image_disp(s.positions[i], s.positions[j], cfg.box_edge);
        min_d2 = std::min(min_d2, d.norm2());
      }
    CHECK(std::sqrt(min_d2) == doctest::Approx(1.15));
    // spacing slightly exceeds the potential minimum, energy finite and small
    CHECK(std::isfinite(total_energy(s, cfg).potential));
    CHECK(total_energy(s, cfg).kinetic == 0.0);
  }
  SUBCASE("n=4 gives a 2x2 grid at 5.75") {
    SimConfig cfg;
    cfg.n_particles = 4;
    SystemState s = lattice_init(cfg);
    CHECK(s.positions[1].x == doctest::Approx(5.75));
    CHECK(s.positions[2].y == doctest::Approx(5.75));
  }
  SUBCASE("box too small") {
    SimConfig cfg;
    cfg.n_particles = 100;
    cfg.box_edge = 5.0;  // spacing 0.5, deep inside the core
    CHECK_THROWS_AS(lattice_init(cfg), ConfigError);
  }
}

TEST_CASE("gamma = 0 reduces exactly to one Verlet step") {
  SimConfig cfg;
  cfg.n_particles = 16;
  cfg.box_edge = 5.75;
  SamplerConfig scfg;
  scfg.gamma = 0.0;
  scfg.step = 0.002;

  SystemState s = lattice_init(cfg);
  for (int i = 0; i < 16; ++i)
    s.velocities[i] = {std::sin(i * 0.7), std::cos(i * 1.3)};

  RngStream rng(1, 0);
  SystemState langevin = langevin_step(s, cfg, scfg, rng);

  SimConfig vcfg = cfg;
  vcfg.dt = scfg.step;
  SystemState verlet = verlet_step(s, vcfg);

  for (int i = 0; i < 16; ++i) {
    CHECK(langevin.positions[i].x == verlet.positions[i].x);
    CHECK(langevin.positions[i].y == verlet.positions[i].y);
    CHECK(langevin.velocities[i].x == verlet.velocities[i].x);
    CHECK(langevin.velocities[i].y == verlet.velocities[i].y);
  }
}

TEST_CASE("langevin determinism: same (seed, stream) gives identical chains") {
  SimConfig cfg;
  cfg.n_particles = 9;
  cfg.box_edge = 5.75;
  SamplerConfig scfg;
  scfg.step = 0.002;

  auto run = [&] {
    RngStream rng(99, 5);
    SystemState s = lattice_init(cfg);
    ForceWorkspace ws;
    ForceResult scratch;
    for (int k = 0; k < 500; ++k)
      langevin_step_inplace(s, cfg, scfg, rng, ws, scratch);
    return s;
  };
  SystemState a = run();
  SystemState b = run();
  for (int i = 0; i < 9; ++i) {
    CHECK(a.positions[i].x == b.positions[i].x);
    CHECK(a.velocities[i].y == b.velocities[i].y);
  }
}

TEST_CASE("OU stationary velocity variance is kT (free particles)") {
  SimConfig cfg;
  cfg.n_particles = 2;
  cfg.box_edge = 20.0;
  SamplerConfig scfg;
  scfg.step = 0.005;
  SystemState s = SystemState::zeros(2);
  s.positions = {{5.0, 5.0}, {15.0, 15.0}};  // never interact in practice

  RngStream rng(3, 0);
  ForceWorkspace ws;
  ForceResult scratch;
  // burn-in for the OU process
  for (int k = 0; k < 2000; ++k)
    langevin_step_inplace(s, cfg, scfg, rng, ws, scratch);

  double sum = 0.0, sum2 = 0.0;
  long count = 0;
  for (int k = 0; k < 100000; ++k) {
    langevin_step_inplace(s, cfg, scfg, rng, ws, scratch);
    if (k % 10 == 0) {
      for (const Vec2& v : s.velocities) {
        sum += v.x + v.y;
        sum2 += v.x * v.x + v.y * v.y;
        count += 2;
      }
    }
  }
  double mean = sum / count;
  double var = sum2 / count - mean * mean;
  // ~2000 decorrelated samples across 4 components: 3 SE is about 0.1
  CHECK(var == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("equipartition_report edge cases") {
  SimConfig cfg;
  cfg.n_particles = 4;
  SUBCASE("all velocities zero") {
    std::vector<SystemState> states(3, lattice_init(cfg));
    auto [mean, se] = equipartition_report(states);
    CHECK(mean == 0.0);
    CHECK(se == 0.0);
  }
  SUBCASE("duplicated state has zero standard error") {
    SystemState s = lattice_init(cfg);
    s.velocities[0] = {1.0, -2.0};
    std::vector<SystemState> states(5, s);
    auto [mean, se] = equipartition_report(states);
    CHECK(mean == doctest::Approx(2.5 / 8.0));
    CHECK(se == 0.0);
  }
  SUBCASE("fewer than 2 states is an error") {
    std::vector<SystemState> one(1, lattice_init(cfg));
    CHECK_THROWS_AS(equipartition_report(one), StatsError);
  }
}

TEST_CASE("sample_canonical determinism and tagging") {
  SimConfig cfg;
  cfg.n_particles = 16;
  cfg.box_edge = 5.75;
  SamplerConfig scfg;
  scfg.step = 0.002;
  scfg.burn_in = 2.0;
  scfg.gap = 1.0;

  std::vector<Sample> a = sample_canonical(cfg, scfg, 4, 2025);
  std::vector<Sample> b = sample_canonical(cfg, scfg, 4, 2025);
  REQUIRE(a.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(a[k].stream == static_cast<std::uint64_t>(k));
    CHECK(a[k].state.time == 0.0);
    CHECK(a[k].state.displacement[0].x == 0.0);
    for (int i = 0; i < 16; ++i) {
      CHECK(a[k].state.positions[i].x == b[k].state.positions[i].x);
      CHECK(a[k].state.velocities[i].y == b[k].state.velocities[i].y);
      CHECK(a[k].state.positions[i].x >= 0.0);
      CHECK(a[k].state.positions[i].x < cfg.box_edge);
    }
  }
}

TEST_CASE("sequential chain is stationary after burn-in") {
  SimConfig cfg;
  cfg.n_particles = 25;
  cfg.box_edge = 5.75;
  SamplerConfig scfg;
  scfg.step = 0.002;
  scfg.burn_in = 20.0;
  scfg.gap = 2.0;

  std::vector<Sample> chain = sample_canonical(cfg, scfg, 60, 11, false);
  std::vector<double> pot;
  for (const Sample& s : chain)
    pot.push_back(compute_forces(s.state, cfg).potential);

  std::vector<double> first(pot.begin(), pot.begin() + 30);
  std::vector<double> second(pot.begin() + 30, pot.end());
  auto [m1, se1] = mean_se(first);
  auto [m2, se2] = mean_se(second);
  double combined = std::sqrt(se1 * se1 + se2 * se2);
  CHECK(std::fabs(m1 - m2) < 3.0 * combined);
}
