#pragma once

#include <span>
#include <vector>

#include "dnls/solitons.hpp"

namespace dnls {

/// beta = c / sqrt(c^2 + gamma (4 omega - c^2)) and alpha = -beta.
struct CurveParams {
  double beta = 0.0;
  double alpha = 0.0;
};
CurveParams curve_params(const SolitonParams& sp);

/// \int_R dy / (cosh y + alpha)^power for power 1 or 2, alpha > -1.
double cosh_integral(double alpha, int power);

double soliton_mass(const ModelParams& p, double omega, double c);
double soliton_momentum(const ModelParams& p, double omega, double c);
/// -(c/4) P.
double soliton_energy(const ModelParams& p, double omega, double c);
/// Action of the soliton, (omega/2) M + (c/4) P.
double d_value(const ModelParams& p, double omega, double c);

/// Zero of s -> P(b, 1, 2s) on (0, 1); requires b > 0.
double s_star(double b);

/// Mass threshold M*(b) for b > -3/16.
double mass_threshold(double b);

enum class DShape { IncreasingThenDecreasing, Increasing };

struct DScanRow {
  double s = 0.0;
  double d = 0.0;
  double momentum = 0.0;
  /// Central difference of d in s; NaN when s +- h leaves the admissible range.
  double fd_slope = 0.0;
};

struct DScan {
  DShape expected = DShape::Increasing;
  std::vector<DScanRow> rows;
  double argmax_s = 0.0;
  bool shape_ok = false;
  /// max |fd - P| / max(|P|, 1) over rows with a finite difference.
  double max_slope_error = 0.0;
};

/// Table of (s, d(1,2s)) with the expected monotonicity pattern checked.
/// Samples must be sorted and admissible.
DScan d_monotonicity_scan(double b, std::span<const double> s_samples, double step = 1e-4);

}  // namespace dnls
