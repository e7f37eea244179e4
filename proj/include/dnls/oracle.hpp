#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dnls/solitons.hpp"

namespace dnls::oracle {

/// Adaptive Gauss-Kronrod (15-point) integral of f over [a, b]; either limit
/// may be infinite. Throws NumericalFailure if the error estimate exceeds tol.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10);

/// Mass and momentum of the DNLS-frame soliton by quadrature of the explicit
/// cosh-form integrands. The algebraic profile is integrated on [-L, L] and
/// completed with its exact tail; L is chosen by the caller.
double quad_soliton_mass(const ModelParams& p, double omega, double c, double tail_from = 200.0);
double quad_soliton_momentum(const ModelParams& p, double omega, double c,
                             double tail_from = 200.0);

enum class ShootStatus { Converged, NotShootable };

struct ShootResult {
  ShootStatus status = ShootStatus::NotShootable;
  std::string message;
  double peak = 0.0;            // profile value at x = 0
  std::vector<double> samples;  // on the make_grid(L, n) layout
};

/// Even decaying solution of the profile ODE by shooting from x = 0 and
/// bisecting on the peak value. The algebraic case is reported, not solved.
ShootResult ode_profile(const ModelParams& p, double omega, double c, double half_length,
                        long long n);

}  // namespace dnls::oracle
