#include "dnls/oracle.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <memory>

#include "dnls/error.hpp"

namespace dnls::oracle {

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 15, tol, &error);
  if (!std::isfinite(value) || error > tol * std::max(1.0, std::abs(value))) {
    throw NumericalFailure("adaptive quadrature did not converge (error estimate " +
                           std::to_string(error) + ")");
  }
  return value;
}

namespace {

struct Integrands {
  std::function<double(double)> density;  // Phi^2
  bool algebraic = false;
};

Integrands integrands(const ModelParams& p, double omega, double c) {
  const SolitonParams sp = make_soliton(p, omega, c);
  if (sp.algebraic()) {
    const double g = p.gamma;
    return {[c, g](double x) { return 4.0 * c / (c * c * x * x + g); }, true};
  }
  const double k2 = 4.0 * omega - c * c;
  const double k = std::sqrt(k2);
  const double r = std::sqrt(c * c + p.gamma * k2);
  const double alpha = -c / r;
  const double amp = 2.0 * k2 / r;
  return {[k, alpha, amp](double x) {
            const double ch = std::cosh(k * x);
            return std::isfinite(ch) ? amp / (ch + alpha) : 0.0;
          },
          false};
}

double quad_power(const Integrands& in, int power, double tail_from) {
  auto f = [&](double x) { return std::pow(in.density(x), power); };
  if (!in.algebraic) {
    return 2.0 * adaptive_quad(f, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
  }
  // density ~ 4/(c x^2) for large x; its tail integrals are elementary.
  const double inner = 2.0 * adaptive_quad(f, 0.0, tail_from, 1e-12);
  const double tail = 2.0 * adaptive_quad(f, tail_from, std::numeric_limits<double>::infinity(), 1e-12);
  return inner + tail;
}

}  // namespace

double quad_soliton_mass(const ModelParams& p, double omega, double c, double tail_from) {
  return quad_power(integrands(p, omega, c), 1, tail_from);
}

double quad_soliton_momentum(const ModelParams& p, double omega, double c, double tail_from) {
  const Integrands in = integrands(p, omega, c);
  return -0.5 * c * quad_power(in, 1, tail_from) + 0.25 * quad_power(in, 2, tail_from);
}

namespace {

struct Rhs {
  double linear;   // omega - c^2/4
  double cubic;    // c/2
  double quintic;  // 3 gamma/16
};

int profile_rhs(double, const double y[], double dydx[], void* params) {
  const auto* r = static_cast<const Rhs*>(params);
  const double u = y[0];
  const double u2 = u * u;
  dydx[0] = y[1];
  dydx[1] = u * (r->linear + u2 * (r->cubic - r->quintic * u2));
  return GSL_SUCCESS;
}

using Driver = std::unique_ptr<gsl_odeiv2_driver, decltype(&gsl_odeiv2_driver_free)>;

Driver make_driver(gsl_odeiv2_system* sys) {
  return Driver(gsl_odeiv2_driver_alloc_y_new(sys, gsl_odeiv2_step_rk8pd, 1e-4, 1e-15, 1e-14),
                gsl_odeiv2_driver_free);
}

enum class Outcome { Undershoot, Overshoot, Reached };

// Integrates from x = 0 with y = (peak, 0) through the checkpoints; stops at
// the first checkpoint where the orbit has turned up or crossed zero.
Outcome shoot(gsl_odeiv2_system* sys, double peak, const std::vector<double>& checkpoints,
              std::vector<double>* values) {
  Driver driver = make_driver(sys);
  double x = 0.0;
  double y[2] = {peak, 0.0};
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] > x) {
      if (gsl_odeiv2_driver_apply(driver.get(), &x, checkpoints[i], y) != GSL_SUCCESS) {
        return Outcome::Overshoot;
      }
    }
    if (y[0] < 0.0) return Outcome::Overshoot;
    if (y[1] > 0.0) return Outcome::Undershoot;
    if (values) (*values)[i] = y[0];
  }
  return Outcome::Reached;
}

}  // namespace

ShootResult ode_profile(const ModelParams& p, double omega, double c, double half_length,
                        long long n) {
  const SolitonParams sp = make_soliton(p, omega, c);
  const Grid grid = make_grid(half_length, n);
  ShootResult result;
  if (sp.algebraic()) {
    result.message = "algebraic decay not shootable";
    return result;
  }
  Rhs rhs{omega - 0.25 * c * c, 0.5 * c, 3.0 * p.gamma / 16.0};
  gsl_odeiv2_system sys{profile_rhs, nullptr, 2, &rhs};
  const auto old_handler = gsl_set_error_handler_off();

  // Checkpoints at the non-negative grid abscissae, plus the right edge.
  const std::size_t half = grid.points / 2;
  std::vector<double> checkpoints;
  for (std::size_t j = half; j < grid.points; ++j) checkpoints.push_back(grid.x(j));
  checkpoints.push_back(half_length);

  // Bracket: grow the peak from a small value until the orbit overshoots.
  double lo = 1e-3;
  double hi = 0.0;
  for (double a = lo; a < 1e4; a *= 1.01) {
    const Outcome o = shoot(&sys, a, checkpoints, nullptr);
    if (o == Outcome::Undershoot) {
      lo = a;
    } else {
      hi = a;
      break;
    }
  }
  if (hi == 0.0) {
    gsl_set_error_handler(old_handler);
    throw NumericalFailure("shooting bracket failure: no overshooting peak found");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Outcome o = shoot(&sys, mid, checkpoints, nullptr);
    if (o == Outcome::Undershoot) {
      lo = mid;
    } else if (o == Outcome::Overshoot) {
      hi = mid;
    } else {
      lo = hi = mid;
    }
  }
  // Refine to adjacent doubles; the unstable direction amplifies any offset.
  for (int iter = 0; iter < 64; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (shoot(&sys, mid, checkpoints, nullptr) == Outcome::Undershoot ? lo : hi) = mid;
  }

  std::vector<double> right(checkpoints.size(), 0.0);
  shoot(&sys, lo, checkpoints, &right);
  gsl_set_error_handler(old_handler);

  result.status = ShootStatus::Converged;
  result.peak = lo;
  result.samples.assign(grid.points, 0.0);
  for (std::size_t j = half; j < grid.points; ++j) result.samples[j] = right[j - half];
  result.samples[0] = right.back();
  for (std::size_t j = 1; j < half; ++j) result.samples[j] = result.samples[grid.points - j];
  return result;
}

}  // namespace dnls::oracle
