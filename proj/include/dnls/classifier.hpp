#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnls/field.hpp"
#include "dnls/functionals.hpp"
#include "dnls/kernels.hpp"
#include "dnls/solitons.hpp"

namespace dnls {

/// Scalars that determine every action and Nehari value of a field.
struct ScalarInvariants {
  Frame frame = Frame::Gauge;
  double grad_sq = 0.0;
  double mass = 0.0;
  double p_lin = 0.0;
  double l4 = 0.0;
  double l6 = 0.0;
  double interaction = 0.0;  // <i |f|^2 f_x, f>
  double energy = 0.0;
  double momentum = 0.0;

  [[nodiscard]] kernels::Sums sums() const;
};

ScalarInvariants invariant_summary(const Field& f, const ModelParams& p, Frame frame);
ScalarInvariants invariants_from_sums(const kernels::Sums& s, const ModelParams& p, Frame frame);

/// Invariants of e^{i kappa x} f, obtained exactly from those of f.
ScalarInvariants modulate(const ScalarInvariants& si, const ModelParams& p, double kappa);

struct Membership {
  bool in_well = false;  // action < d
  int k_sign = 0;        // sign of the Nehari functional, 0 inside the dead-band
  double action = 0.0;
  double d = 0.0;
  double nehari = 0.0;
};

Membership member(const ScalarInvariants& si, const ModelParams& p, double omega, double c);

enum class Verdict { APlus, AMinus, Both, Neither };
const char* verdict_name(Verdict v);

/// Open interval (lo, hi); hi may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Verdict along the scaling curve omega = mu^2, c = 2 s mu.
struct CurveVerdict {
  double s = 0.0;
  Verdict verdict = Verdict::Neither;
  /// {mu > 0 : action - d < 0}; up to two intervals.
  std::vector<Interval> wells;
  /// Nehari(mu) is negative exactly on (roots[0], roots[1]) when two roots exist.
  std::vector<double> nehari_roots;
  /// Coefficients of action - d = quad mu^2 + lin mu + constant (after dead-banding).
  double quad = 0.0;
  double lin = 0.0;
  double constant = 0.0;
  /// A point of the curve witnessing A_plus (NaN if none).
  double plus_witness_mu = 0.0;
  double minus_witness_mu = 0.0;
};

CurveVerdict scan_curve(const ScalarInvariants& si, const ModelParams& p, double s);

/// Nehari rescaling: lambda0 > 0 with K(lambda0 f) = 0. Empty when no positive root exists.
std::optional<double> nehari_normalize(const ScalarInvariants& si, const ModelParams& p,
                                       double omega, double c);

/// Smallest power-of-two mu in [1, cap] with e^{i mu x} f in A_plus along s = 1.
std::optional<double> find_plus_oscillation(const ScalarInvariants& si, const ModelParams& p,
                                            double cap = 1073741824.0);

struct MinusOscillation {
  double epsilon = 0.0;
  double mu = 0.0;
};
/// Some (eps, mu) with e^{-i(1-eps) mu x} f in A_minus along s = -(1-eps).
std::optional<MinusOscillation> find_minus_oscillation(const ScalarInvariants& si,
                                                       const ModelParams& p,
                                                       double cap = 1073741824.0);

struct ClassificationResult {
  Frame frame = Frame::Gauge;
  double b = 0.0;
  ScalarInvariants invariants;
  std::optional<double> mass_threshold;
  std::optional<double> s_star;
  /// Reference s for the small-mass statement: s* when b > 0, 1 otherwise.
  double s_ref = 1.0;
  std::vector<std::string> cases;
  std::vector<CurveVerdict> curve;
  bool boundary_soliton = false;
  bool global_existence = false;
  std::optional<double> witness_omega;
  std::optional<double> witness_c;
  /// 8 S(f) + (c^2/2) M(f) at the witness: bound on sup_t ||v_x(t)||^2.
  std::optional<double> gradient_bound;
  /// Critical-line route (b = -3/16): s0 with 2 d(1, 2 s0) > M.
  std::optional<double> critical_s0;
  std::optional<double> plus_oscillation_mu;
  std::optional<MinusOscillation> minus_oscillation;
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Full well analysis of f. s_grid lists the curve parameters to scan;
/// s* (b > 0) and s = 1 are always added.
ClassificationResult classify_field(const Field& f, const ModelParams& p, Frame frame,
                                    const std::vector<double>& s_grid);
ClassificationResult classify_invariants(const ScalarInvariants& si, const ModelParams& p,
                                         const std::vector<double>& s_grid);

/// Evenly spaced admissible s values in (lo, hi], n of them.
std::vector<double> make_s_grid(double lo, double hi, int n);

}  // namespace dnls
