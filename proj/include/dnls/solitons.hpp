#pragma once

#include "dnls/field.hpp"

namespace dnls {

/// Coefficient b of the quintic term and the derived gamma = 1 + 16b/3.
struct ModelParams {
  double b = 0.0;
  double gamma = 1.0;

  static ModelParams from_b(double b) { return {b, 1.0 + 16.0 * b / 3.0}; }
};

/// sqrt(-gamma / (1 - gamma)); lower speed bound for gamma <= 0.
double lower_speed_ratio(double gamma);

/// Whether a soliton with frequency omega and speed c exists.
/// Throws DomainError for omega <= 0.
bool existence_region(const ModelParams& p, double omega, double c);

/// Validated soliton parameters.
struct SolitonParams {
  ModelParams model;
  double omega = 1.0;
  double c = 0.0;

  [[nodiscard]] double s() const;
  /// 4*omega - c^2, clamped at zero for the algebraic case.
  [[nodiscard]] double kappa_sq() const;
  /// sqrt(c^2 + gamma*(4*omega - c^2)).
  [[nodiscard]] double radius() const;
  /// c == 2 sqrt(omega) up to round-off.
  [[nodiscard]] bool algebraic() const;
};

/// Throws DomainError outside the existence region.
SolitonParams make_soliton(const ModelParams& p, double omega, double c);
SolitonParams make_soliton_s(const ModelParams& p, double omega, double s);

/// Squared modulus of the soliton profile at x.
double phi_sq(const SolitonParams& sp, double x);

/// Real positive even profile.
Field sample_capital_phi(const SolitonParams& sp, const Grid& g);
/// e^{icx/2} times the real profile (gauge frame soliton).
Field sample_varphi(const SolitonParams& sp, const Grid& g);
/// DNLS-frame soliton; the phase integral starts at the left grid edge.
Field sample_phi(const SolitonParams& sp, const Grid& g);

/// Mass of the profile outside [-L, L]. Exact for the algebraic profile,
/// a sharp exponential estimate otherwise.
double tail_mass(const SolitonParams& sp, double half_length);

/// Half-length making the truncated mass error smaller than tol:
/// 30/kappa in the exponential regime, inverse of the algebraic tail otherwise.
double suggested_half_length(const SolitonParams& sp, double tol = 1e-3);

}  // namespace dnls
