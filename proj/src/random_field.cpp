#include "dnls/random_field.hpp"

#include <cmath>
#include <numbers>

#include "dnls/error.hpp"
#include "dnls/functionals.hpp"

namespace dnls {

Field gaussian(const Grid& g, double amplitude, double width, double centre, double kick) {
  return Field::from_function(g, [=](double x) {
    const double z = (x - centre) / width;
    return std::polar(amplitude * std::exp(-z * z), kick * x);
  });
}

Field random_smooth_field(const Grid& g, std::mt19937_64& rng, const RandomFieldOptions& opt) {
  std::uniform_int_distribution<int> bumps(opt.min_bumps, opt.max_bumps);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto between = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  const int count = bumps(rng);
  std::vector<Complex> values(g.points, Complex{});
  for (int i = 0; i < count; ++i) {
    const double amp = between(0.2, 1.0) * opt.max_amplitude;
    const double width = between(opt.min_width, opt.max_width);
    const double centre = between(-opt.spread, opt.spread);
    const double kick = between(-opt.max_kick, opt.max_kick);
    const double phase = between(0.0, 2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < g.points; ++j) {
      const double z = (g.x(j) - centre) / width;
      values[j] += std::polar(amp * std::exp(-z * z), phase + kick * (g.x(j) - centre));
    }
  }
  return Field(g, std::move(values));
}

Field with_mass(const Field& f, double target) {
  const double m = mass(f);
  if (!(m > 0.0)) throw DomainError("cannot rescale a zero field");
  return f.scaled(std::sqrt(target / m));
}

std::vector<std::pair<double, double>> admissible_samples(const ModelParams& p, int count,
                                                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double s_hi = p.gamma > 0.0 ? 0.95 : -lower_speed_ratio(p.gamma) - 0.02;
  const double s_lo = -0.95;
  if (!(s_hi > s_lo)) throw DomainError("existence interval too narrow to sample");
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i < count; ++i) {
    const double omega = 0.5 + 1.5 * unit(rng);
    const double s = s_lo + (s_hi - s_lo) * unit(rng);
    out.emplace_back(omega, 2.0 * s * std::sqrt(omega));
  }
  return out;
}

}  // namespace dnls
