#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ljmd/geometry.hpp"
#include "ljmd/rng.hpp"

using namespace ljmd;

TEST_CASE("min_image_disp wrap-around") {
  Vec2 d = min_image_disp({0.5, 0.5}, {11.0, 11.0}, 11.5);
  CHECK(d.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("min_image_disp identity") {
  Vec2 d = min_image_disp({3.0, 4.0}, {3.0, 4.0}, 11.5);
  CHECK(d.x == 0.0);
  CHECK(d.y == 0.0);
}

TEST_CASE("half-box tie maps to -L/2") {
  Vec2 d = min_image_disp({0.0, 0.0}, {5.75, 0.0}, 11.5);
  CHECK(d.x == -5.75);
  CHECK(d.y == 0.0);
}

TEST_CASE("wrap_coord stays in [0, L)") {
  CHECK(wrap_coord(11.5, 11.5) == 0.0);
  CHECK(wrap_coord(-0.1, 11.5) == doctest::Approx(11.4));
  CHECK(wrap_coord(23.1, 11.5) == doctest::Approx(0.1));
  CHECK(wrap_coord(-1e-18, 11.5) < 11.5);
  CHECK(wrap_coord(-1e-18, 11.5) >= 0.0);
}

TEST_CASE("min_image antisymmetry off the tie") {
  const double L = 11.5;
  RngStream rng(99, 0);
  for (int k = 0; k < 2000; ++k) {
    Vec2 a{rng.uniform01() * L, rng.uniform01() * L};
    Vec2 b{rng.uniform01() * L, rng.uniform01() * L};
    Vec2 ab = min_image_disp(a, b, L);
    Vec2 ba = min_image_disp(b, a, L);
    CHECK(ab.x == doctest::Approx(-ba.x).epsilon(1e-12));
    CHECK(ab.y == doctest::Approx(-ba.y).epsilon(1e-12));
    CHECK(ab.x >= -L / 2);
    CHECK(ab.x < L / 2);
  }
}
