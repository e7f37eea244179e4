#pragma once

#include "dnls/field.hpp"

namespace dnls {

/// Algebraic soliton with omega = 1, c = 2, b = 0 in the DNLS frame, phase
/// integral taken from -infinity.
Complex algebraic_profile(double xi);

/// ||d/dx algebraic_profile||_{L^2}^2 = 4 pi.
double algebraic_profile_grad_sq();

/// f ~ e^{i theta} lambda^{-1/2} algebraic_profile((x - y) / lambda).
struct ProfileFit {
  double theta = 0.0;
  double y = 0.0;
  double lambda = 0.0;
  /// Starting value ||profile_x|| / ||f_x||.
  double lambda_formula = 0.0;
  /// H^1 distance in the rescaled variable after optimisation.
  double residual = 0.0;
  /// H^1 norm of the reference profile sampled on the same grid.
  double reference_norm = 0.0;
};

/// Sample of e^{i theta} lambda^{-1/2} algebraic_profile((x - y)/lambda).
Field rescaled_algebraic_profile(const Grid& g, double theta, double y, double lambda);

ProfileFit profile_fit(const Field& f);

}  // namespace dnls
