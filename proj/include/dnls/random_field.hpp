#pragma once

#include <random>

#include "dnls/field.hpp"
#include "dnls/solitons.hpp"

namespace dnls {

/// amplitude * exp(-(x - centre)^2 / width^2) * exp(i kick x).
Field gaussian(const Grid& g, double amplitude, double width, double centre = 0.0,
               double kick = 0.0);

struct RandomFieldOptions {
  int min_bumps = 1;
  int max_bumps = 3;
  double min_width = 0.6;
  double max_width = 2.0;
  double max_amplitude = 1.0;
  double max_kick = 1.0;
  /// Centres are drawn from [-spread, spread].
  double spread = 3.0;
};

/// Sum of randomly placed, randomly phased Gaussian bumps with small linear
/// phases. Smooth and effectively band-limited on reasonable grids.
Field random_smooth_field(const Grid& g, std::mt19937_64& rng, const RandomFieldOptions& opt = {});

/// Rescale so that the mass equals target.
Field with_mass(const Field& f, double target);

/// (omega, c) pairs drawn uniformly inside the existence region, away from
/// its edges; the algebraic edge is excluded.
std::vector<std::pair<double, double>> admissible_samples(const ModelParams& p, int count,
                                                          std::mt19937_64& rng);

}  // namespace dnls
