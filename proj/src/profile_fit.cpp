#include "dnls/profile_fit.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "dnls/error.hpp"
#include "dnls/evolve.hpp"
#include "dnls/functionals.hpp"

namespace dnls {

Complex algebraic_profile(double xi) {
  const double amp = std::sqrt(8.0 / (4.0 * xi * xi + 1.0));
  return std::polar(amp, xi - std::atan(2.0 * xi) - 0.5 * std::numbers::pi);
}

double algebraic_profile_grad_sq() { return 4.0 * std::numbers::pi; }

Field rescaled_algebraic_profile(const Grid& g, double theta, double y, double lambda) {
  std::vector<Complex> values(g.points);
  const Complex rot = std::polar(1.0 / std::sqrt(lambda), theta);
  for (std::size_t j = 0; j < g.points; ++j) {
    values[j] = rot * algebraic_profile((g.x(j) - y) / lambda);
  }
  return Field(g, std::move(values));
}

namespace {

struct FitProblem {
  const Field* f;
  Field fx;
  double theta = 0.0;
  double reference_norm = 0.0;

  // Squared H^1 distance with the optimal phase; stores that phase.
  double distance_sq(double y, double lambda) {
    const Grid& g = f->grid();
    const Field r = rescaled_algebraic_profile(g, 0.0, y, lambda);
    const Field rx = spectral_derivative(r);
    const double l2 = lambda * lambda;
    Complex z{0.0, 0.0};
    double norm_f = 0.0;
    double norm_r = 0.0;
    for (std::size_t j = 0; j < g.points; ++j) {
      z += (*f)[j] * std::conj(r[j]) + l2 * fx[j] * std::conj(rx[j]);
      norm_f += std::norm((*f)[j]) + l2 * std::norm(fx[j]);
      norm_r += std::norm(r[j]) + l2 * std::norm(rx[j]);
    }
    theta = std::arg(z);
    reference_norm = std::sqrt(norm_r * g.dx);
    return std::max(0.0, (norm_f + norm_r - 2.0 * std::abs(z)) * g.dx);
  }
};

double objective(const gsl_vector* v, void* params) {
  auto* prob = static_cast<FitProblem*>(params);
  return prob->distance_sq(gsl_vector_get(v, 0), std::exp(gsl_vector_get(v, 1)));
}

}  // namespace

ProfileFit profile_fit(const Field& f) {
  FitProblem prob{&f, spectral_derivative(f)};
  const double grad_sq = field_sums(f).grad_sq;
  if (!(grad_sq > 1e-24) || !(mass(f) > 1e-24)) {
    throw DomainError("profile_fit needs a field with nonzero gradient");
  }
  ProfileFit fit;
  fit.lambda_formula = std::sqrt(algebraic_profile_grad_sq() / grad_sq);
  const double lambda0 = fit.lambda_formula;
  const Field centred = rescaled_algebraic_profile(f.grid(), 0.0, 0.0, lambda0);
  const double y0 = modulus_shift(centred, f);

  const auto old_handler = gsl_set_error_handler_off();
  using Minimizer = std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)>;
  Minimizer solver(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2),
                   gsl_multimin_fminimizer_free);
  gsl_vector* start = gsl_vector_alloc(2);
  gsl_vector* steps = gsl_vector_alloc(2);
  gsl_vector_set(start, 0, y0);
  gsl_vector_set(start, 1, std::log(lambda0));
  gsl_vector_set(steps, 0, 0.25 * lambda0);
  gsl_vector_set(steps, 1, 0.05);
  gsl_multimin_function fn{objective, 2, &prob};
  gsl_multimin_fminimizer_set(solver.get(), &fn, start, steps);
  for (int iter = 0; iter < 2000; ++iter) {
    if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(solver.get());
    if (gsl_multimin_test_size(size, 1e-11) == GSL_SUCCESS) break;
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(solver.get());
  fit.y = gsl_vector_get(best, 0);
  fit.lambda = std::exp(gsl_vector_get(best, 1));
  fit.residual = std::sqrt(prob.distance_sq(fit.y, fit.lambda));
  fit.theta = prob.theta;
  fit.reference_norm = prob.reference_norm;
  gsl_vector_free(start);
  gsl_vector_free(steps);
  gsl_set_error_handler(old_handler);
  return fit;
}

}  // namespace dnls
