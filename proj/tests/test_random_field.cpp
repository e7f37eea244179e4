#include <random>

#include "doctest.h"
#include "dnls/functionals.hpp"
#include "dnls/random_field.hpp"

using namespace dnls;

TEST_SUITE("random_field") {
  TEST_CASE("seeded fields are reproducible") {
    const Grid g = make_grid(16.0, 128);
    std::mt19937_64 a(42), b(42);
    CHECK(l2_distance(random_smooth_field(g, a), random_smooth_field(g, b)) == 0.0);
  }

  TEST_CASE("mass rescaling") {
    const Grid g = make_grid(16.0, 128);
    std::mt19937_64 rng(1);
    const Field f = with_mass(random_smooth_field(g, rng), 12.5);
    CHECK(mass(f) == doctest::Approx(12.5).epsilon(1e-14));
  }

  TEST_CASE("admissible samples lie inside the existence region") {
    std::mt19937_64 rng(2);
    for (double b : {0.2, 0.0, -3.0 / 16.0, -0.3}) {
      const auto p = ModelParams::from_b(b);
      for (const auto& [omega, c] : admissible_samples(p, 50, rng)) {
        CHECK(existence_region(p, omega, c));
        CHECK_FALSE(make_soliton(p, omega, c).algebraic());
      }
    }
  }
}
