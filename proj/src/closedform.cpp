#include "dnls/closedform.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_roots.h>

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "dnls/error.hpp"

namespace dnls {
namespace {

// Taylor coefficients in w = theta^2 (trig side) of 2 theta / sin theta and
// 2 (sin theta - theta cos theta) / sin^3 theta. The hyperbolic side uses w = -theta^2.
constexpr std::array<double, 8> kSeriesPower1 = {
    2.0,           1.0 / 3.0,        7.0 / 180.0,
    31.0 / 7560.0, 127.0 / 302400.0, 73.0 / 1710720.0,
    1414477.0 / 326918592000.0, 8191.0 / 18681062400.0};
constexpr std::array<double, 8> kSeriesPower2 = {
    2.0 / 3.0,          4.0 / 15.0,          4.0 / 63.0,        8.0 / 675.0,
    4.0 / 2079.0,       5528.0 / 19348875.0, 8.0 / 200475.0,    57872.0 / 10854718875.0};

constexpr double kSeriesSwitch = 0.25;

double horner(const std::array<double, 8>& coef, double w) {
  double acc = 0.0;
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * w + *it;
  return acc;
}

}  // namespace

CurveParams curve_params(const SolitonParams& sp) {
  const double beta = sp.c / sp.radius();
  return {beta, -beta};
}

double cosh_integral(double alpha, int power) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("cosh_integral needs alpha > -1, got " + std::to_string(alpha));
  }
  if (power != 1 && power != 2) throw DomainError("cosh_integral power must be 1 or 2");
  const auto& series = power == 1 ? kSeriesPower1 : kSeriesPower2;
  if (alpha == 1.0) return series[0];
  if (alpha < 1.0) {
    const double q = std::sqrt((1.0 - alpha) / (1.0 + alpha));
    const double theta = 2.0 * std::atan(q);
    if (theta < kSeriesSwitch) return horner(series, theta * theta);
    const double w = (1.0 - alpha) * (1.0 + alpha);
    const double at = std::atan(q);
    if (power == 1) return 4.0 / std::sqrt(w) * at;
    return 2.0 / w - 4.0 * alpha / (w * std::sqrt(w)) * at;
  }
  const double w = (alpha - 1.0) * (alpha + 1.0);
  const double theta = 2.0 * std::atanh(std::sqrt((alpha - 1.0) / (alpha + 1.0)));
  if (theta < kSeriesSwitch) return horner(series, -theta * theta);
  const double lg = std::log(alpha + std::sqrt(w));
  if (power == 1) return 2.0 / std::sqrt(w) * lg;
  return -2.0 / w + 2.0 * alpha / (w * std::sqrt(w)) * lg;
}

double soliton_mass(const ModelParams& p, double omega, double c) {
  const SolitonParams sp = make_soliton(p, omega, c);
  const double k = std::sqrt(sp.kappa_sq());
  const double g = p.gamma;
  if (g > 0.0) {
    // 8/sqrt(g) atan sqrt((1+beta)/(1-beta)) written through the half angle.
    return 4.0 / std::sqrt(g) * std::atan2(std::sqrt(g) * k, -sp.c);
  }
  if (g == 0.0) return 4.0 * k / (-sp.c);
  return 4.0 / std::sqrt(-g) * std::asinh(std::sqrt(-g) * k / sp.radius());
}

double soliton_momentum(const ModelParams& p, double omega, double c) {
  const SolitonParams sp = make_soliton(p, omega, c);
  const double m = soliton_mass(p, omega, c);
  const double g = p.gamma;
  if (std::abs(g) < 1e-8) return -(2.0 * omega + c * c) / (3.0 * c) * m;
  const double k = std::sqrt(sp.kappa_sq());
  return 0.5 * c * (-1.0 + 1.0 / g) * m + 2.0 / g * k;
}

double soliton_energy(const ModelParams& p, double omega, double c) {
  return -0.25 * c * soliton_momentum(p, omega, c);
}

double d_value(const ModelParams& p, double omega, double c) {
  return 0.5 * omega * soliton_mass(p, omega, c) + 0.25 * c * soliton_momentum(p, omega, c);
}

double s_star(double b) {
  if (!(b > 0.0)) throw DomainError("s_star needs b > 0, got " + std::to_string(b));
  const ModelParams p = ModelParams::from_b(b);
  auto momentum = [](double s, void* ctx) {
    return soliton_momentum(*static_cast<const ModelParams*>(ctx), 1.0, 2.0 * s);
  };
  gsl_function fn{momentum, const_cast<ModelParams*>(&p)};
  double lo = 1e-6;
  double hi = 1.0 - 1e-9;
  if (!(momentum(lo, fn.params) > 0.0 && momentum(hi, fn.params) < 0.0)) {
    throw NumericalFailure("momentum does not change sign on the s bracket");
  }
  const auto old_handler = gsl_set_error_handler_off();
  std::unique_ptr<gsl_root_fsolver, decltype(&gsl_root_fsolver_free)> solver(
      gsl_root_fsolver_alloc(gsl_root_fsolver_brent), gsl_root_fsolver_free);
  gsl_root_fsolver_set(solver.get(), &fn, lo, hi);
  double root = 0.5 * (lo + hi);
  bool converged = false;
  for (int iter = 0; iter < 200 && !converged; ++iter) {
    if (gsl_root_fsolver_iterate(solver.get()) != GSL_SUCCESS) break;
    root = gsl_root_fsolver_root(solver.get());
    lo = gsl_root_fsolver_x_lower(solver.get());
    hi = gsl_root_fsolver_x_upper(solver.get());
    converged = std::abs(momentum(root, fn.params)) < 1e-10 ||
                gsl_root_test_interval(lo, hi, 0.0, 4 * std::numeric_limits<double>::epsilon()) ==
                    GSL_SUCCESS;
  }
  gsl_set_error_handler(old_handler);
  if (!(std::abs(momentum(root, fn.params)) < 1e-10)) {
    throw NumericalFailure("s_star root search did not reach |P| < 1e-10");
  }
  return root;
}

double mass_threshold(double b) {
  if (!(b > -3.0 / 16.0)) {
    throw DomainError("mass_threshold needs b > -3/16, got " + std::to_string(b));
  }
  const ModelParams p = ModelParams::from_b(b);
  if (b > 0.0) return soliton_mass(p, 1.0, 2.0 * s_star(b));
  return 4.0 * std::numbers::pi / std::pow(p.gamma, 1.5);
}

DScan d_monotonicity_scan(double b, std::span<const double> s_samples, double step) {
  const ModelParams p = ModelParams::from_b(b);
  DScan scan;
  scan.expected = b > 0.0 ? DShape::IncreasingThenDecreasing : DShape::Increasing;
  auto admissible = [&](double s) { return existence_region(p, 1.0, 2.0 * s); };
  auto d_of = [&](double s) { return d_value(p, 1.0, 2.0 * s); };

  for (double s : s_samples) {
    if (!admissible(s)) throw DomainError("inadmissible s in scan: " + std::to_string(s));
    DScanRow row{s, d_of(s), soliton_momentum(p, 1.0, 2.0 * s),
                 std::numeric_limits<double>::quiet_NaN()};
    if (admissible(s - step) && admissible(s + step)) {
      row.fd_slope = (d_of(s + step) - d_of(s - step)) / (2.0 * step);
      const double err = std::abs(row.fd_slope - row.momentum) / std::max(std::abs(row.momentum), 1.0);
      scan.max_slope_error = std::max(scan.max_slope_error, err);
    }
    scan.rows.push_back(row);
  }
  if (scan.rows.empty()) return scan;

  std::size_t peak = 0;
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    if (scan.rows[i].d > scan.rows[peak].d) peak = i;
  }
  scan.argmax_s = scan.rows[peak].s;
  bool ok = true;
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    const bool rising = scan.rows[i].d > scan.rows[i - 1].d;
    const bool before_peak = i <= peak;
    if (scan.expected == DShape::Increasing) {
      ok = ok && rising;
    } else {
      ok = ok && (before_peak ? rising : !rising);
    }
  }
  if (scan.expected == DShape::IncreasingThenDecreasing && peak + 1 < scan.rows.size()) {
    // The maximum must sit next to the momentum zero.
    const double ss = s_star(b);
    const double lo = peak > 0 ? scan.rows[peak - 1].s : scan.rows[peak].s;
    const double hi = scan.rows[peak + 1].s;
    ok = ok && lo <= ss && ss <= hi;
  }
  scan.shape_ok = ok;
  return scan;
}

}  // namespace dnls
