#include <cmath>
#include <random>

#include "doctest.h"
#include "dnls/functionals.hpp"
#include "dnls/gauge.hpp"
#include "dnls/random_field.hpp"

using namespace dnls;

TEST_SUITE("gauge") {
  TEST_CASE("identity, modulus and composition") {
    const Grid g = make_grid(20.0, 256);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
      const Field f = random_smooth_field(g, rng);
      CHECK(l2_distance(gauge_transform(f, 0.0), f) == 0.0);
      const Field once = gauge_transform(f, 0.3);
      for (std::size_t j = 0; j < g.points; ++j) {
        CHECK(std::abs(once[j]) == doctest::Approx(std::abs(f[j])).epsilon(1e-14));
      }
      const Field twice = gauge_transform(once, -0.55);
      CHECK(l2_distance(twice, gauge_transform(f, -0.25)) < 1e-12 * l2_norm(f));
      const auto a = field_sums(f);
      const auto b = field_sums(once);
      CHECK(b.mass == doctest::Approx(a.mass).epsilon(1e-14));
      CHECK(b.l4 == doctest::Approx(a.l4).epsilon(1e-14));
      CHECK(b.l6 == doctest::Approx(a.l6).epsilon(1e-14));
    }
  }

  TEST_CASE("gauge momentum equals the original momentum") {
    const Grid g = make_grid(20.0, 512);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
      const Field u = random_smooth_field(g, rng);
      const Field v = gauge_transform(u, 0.25);
      const double p_u = momentum(u, Frame::Dnls);
      const double p_v_lin = field_sums(v).p_lin;
      const double l4 = field_sums(u).l4;
      CHECK(std::abs(p_v_lin - (p_u - 0.25 * l4)) < 1e-9 * std::max(1.0, l4));
      CHECK(std::abs(momentum(v, Frame::Gauge) - p_u) < 1e-9 * std::max(1.0, l4));
    }
  }

  TEST_CASE("sampled solitons are related by the gauge map") {
    for (double b : {0.0, 0.1, -0.3}) {
      const auto p = ModelParams::from_b(b);
      const auto sp = make_soliton_s(p, 1.0, b < -0.1875 ? -0.9 : 0.4);
      const Grid g = make_grid(30.0 / std::sqrt(sp.kappa_sq()), 1024);
      const Field v = gauge_transform(sample_phi(sp, g), 0.25);
      const Field ref = sample_varphi(sp, g);
      double mean = 0.0, mean_sq = 0.0, weight = 0.0;
      for (std::size_t j = 0; j < g.points; ++j) {
        CHECK(std::abs(v[j]) == doctest::Approx(std::abs(ref[j])).epsilon(1e-13));
        const double w = std::norm(ref[j]);
        const double d = std::arg(v[j] * std::conj(ref[j]));
        mean += w * d;
        mean_sq += w * d * d;
        weight += w;
      }
      mean /= weight;
      CHECK(std::sqrt(std::max(0.0, mean_sq / weight - mean * mean)) < 1e-6);
    }
  }
}
