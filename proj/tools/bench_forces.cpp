// Compares the OpenMP cell-list force kernel against the serial all-pairs
// reference: wall time per evaluation and bit-equality of the results.
//
//   bench_forces [n_particles] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ljmd/forces.hpp"
#include "ljmd/rng.hpp"

using namespace ljmd;
namespace chrono = std::chrono;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 400;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 200;

  SimConfig cfg;
  cfg.n_particles = n;
  cfg.box_edge = 11.5 * std::sqrt(n / 100.0);  // keep the reference density
  cfg.dt = 0.01;

  RngStream rng(12345, 0);
  SystemState state = SystemState::zeros(n);
  for (int i = 0; i < n; ++i) {
    state.positions[i] = {rng.uniform01() * cfg.box_edge,
                          rng.uniform01() * cfg.box_edge};
    state.velocities[i] = {rng.normal(), rng.normal()};
  }

  ForceResult cell = compute_forces(state, cfg);
  ForceResult naive = compute_forces_naive(state, cfg);
  bool identical = cell.potential == naive.potential;
  for (int i = 0; i < n && identical; ++i)
    identical = cell.forces[i].x == naive.forces[i].x &&
                cell.forces[i].y == naive.forces[i].y;
  std::printf("bit-identical: %s\n", identical ? "yes" : "NO");

  auto time_it = [&](auto&& fn) {
    auto t0 = chrono::steady_clock::now();
    double sink = 0.0;
    for (int r = 0; r < repeats; ++r) sink += fn().potential;
    auto t1 = chrono::steady_clock::now();
    double us = chrono::duration<double, std::micro>(t1 - t0).count() / repeats;
    return std::pair{us, sink};
  };

  auto [us_naive, s1] = time_it([&] { return compute_forces_naive(state, cfg); });
  auto [us_cell, s2] = time_it([&] { return compute_forces(state, cfg); });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("n=%d  repeats=%d  threads=%d\n", n, repeats, threads);
  std::printf("all-pairs serial : %10.2f us/eval\n", us_naive);
  std::printf("cell-list openmp : %10.2f us/eval\n", us_cell);
  std::printf("speedup          : %10.2fx\n", us_naive / us_cell);
  return identical && s1 == s1 && s2 == s2 ? 0 : 1;
}
