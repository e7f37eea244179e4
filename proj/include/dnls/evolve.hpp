#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnls/field.hpp"

namespace dnls {

struct EvolveConfig {
  double b = 0.0;
  /// 0 evolves the original equation, 1/4 the gauge-equivalent form.
  double gauge_a = 0.0;
  double dt = 1e-3;
  double t_end = 1.0;
  /// Fraction of the spectrum kept in the nonlinear term.
  double dealias = 2.0 / 3.0;
  int record_every = 1;
  /// dt <= stability * dx / (1 + max|u|^2).
  double stability = 0.5;
  /// Halve dt until one step and two half steps agree to this relative L2 error.
  bool adaptive = true;
  double step_tolerance = 1e-9;
  double dt_floor = 1e-8;
  /// Integrate toward negative times.
  bool backward = false;
  /// Run the serial reference kernels instead of the OpenMP ones.
  bool serial = false;
};

/// Relative drift of the conserved quantities of the chosen frame.
struct DriftRecord {
  double t = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
};

struct Snapshot {
  double t = 0.0;
  Field field;
};

enum class EvolveStatus { Completed, BlowUp, StepFailure };
const char* evolve_status_name(EvolveStatus status);

/// (omega, c) whose Nehari sign and gradient bound are tracked.
struct Monitor {
  double omega = 1.0;
  double c = 0.0;
};

struct Trajectory {
  EvolveStatus status = EvolveStatus::Completed;
  std::string message;
  std::vector<Snapshot> snapshots;
  std::vector<DriftRecord> drift;
  std::vector<std::pair<double, int>> k_sign;
  double max_drift = 0.0;
  double dt_used = 0.0;  // smallest accepted step
  long long steps = 0;
  /// sup over accepted steps of ||u_x||^2 and the bound 8 S(u0) + (c^2/2) M(u0).
  double max_grad_sq = 0.0;
  std::optional<double> gradient_bound;
};

/// One integrating-factor RK4 step of size cfg.dt (negative if backward).
/// Throws NumericalFailure on overflow or when the stability guard is violated.
Field step(const Field& f, const EvolveConfig& cfg);

Trajectory evolve(const Field& f0, const EvolveConfig& cfg,
                  const std::optional<Monitor>& monitor = std::nullopt);

/// L2 distance at time T between "evolve with a = 0, then gauge by 1/4" and
/// "gauge by 1/4, then evolve with a = 1/4".
double gauge_consistency(const Field& f0, double b, double t_end, EvolveConfig base = {});

/// Shift s maximising the periodic cross-correlation of |f| and |g|, so that
/// |g(x)| ~ |f(x - s)|; sub-grid accuracy by parabolic interpolation.
double modulus_shift(const Field& f, const Field& g);

}  // namespace dnls
