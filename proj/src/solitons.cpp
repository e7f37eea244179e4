#include "dnls/solitons.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dnls/error.hpp"

namespace dnls {
namespace {

constexpr double kAlgebraicTol = 1e-12;

std::string describe(const ModelParams& p, double omega, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "(b=" << p.b << ", omega=" << omega << ", c=" << c << ")";
  return os.str();
}

// (cosh(k x) - 1) / k^2 without cancellation; tends to x^2/2 as k -> 0.
double cosh_minus_one_over_k2(double k, double x) {
  const double y = 0.5 * k * x;
  const double sinhc = std::abs(y) < 1e-4 ? 1.0 + y * y / 6.0 : std::sinh(y) / y;
  return 0.5 * x * x * sinhc * sinhc;
}

}  // namespace

double lower_speed_ratio(double gamma) {
  if (gamma > 0.0) return 0.0;
  return std::sqrt(-gamma / (1.0 - gamma));
}

bool existence_region(const ModelParams& p, double omega, double c) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be positive, got " + describe(p, omega, c));
  }
  if (!std::isfinite(c)) return false;
  const double edge = 2.0 * std::sqrt(omega);
  if (p.gamma > 0.0) {
    return c > -edge && c <= edge * (1.0 + kAlgebraicTol);
  }
  return c > -edge && c < -lower_speed_ratio(p.gamma) * edge;
}

double SolitonParams::s() const { return c / (2.0 * std::sqrt(omega)); }

double SolitonParams::kappa_sq() const {
  if (algebraic()) return 0.0;
  return std::max(0.0, 4.0 * omega - c * c);
}

double SolitonParams::radius() const {
  return std::sqrt(c * c + model.gamma * kappa_sq());
}

bool SolitonParams::algebraic() const {
  const double edge = 2.0 * std::sqrt(omega);
  return c > 0.0 && std::abs(c - edge) <= kAlgebraicTol * edge;
}

SolitonParams make_soliton(const ModelParams& p, double omega, double c) {
  if (!existence_region(p, omega, c)) {
    throw DomainError("no soliton for " + describe(p, omega, c));
  }
  return SolitonParams{p, omega, c};
}

SolitonParams make_soliton_s(const ModelParams& p, double omega, double s) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  const double c = s == 1.0 ? 2.0 * std::sqrt(omega) : 2.0 * s * std::sqrt(omega);
  return make_soliton(p, omega, c);
}

double phi_sq(const SolitonParams& sp, double x) {
  const double k2 = sp.kappa_sq();
  const double k = std::sqrt(k2);
  const double r = sp.radius();
  const double c = sp.c;
  const double g = sp.model.gamma;
  // Denominator (R cosh(kx) - c) / k^2 split as (R - c)/k^2 + R (cosh - 1)/k^2;
  // for c > 0 the first piece is gamma / (R + c), which stays finite at k = 0.
  const double growth = r * cosh_minus_one_over_k2(k, x);
  if (c > 0.0) return 2.0 / (g / (r + c) + growth);
  return 2.0 * k2 / ((r - c) + k2 * growth);
}

Field sample_capital_phi(const SolitonParams& sp, const Grid& g) {
  std::vector<Complex> values(g.points);
  for (std::size_t j = 0; j < g.points; ++j) values[j] = std::sqrt(phi_sq(sp, g.x(j)));
  // Exact evenness: x(N-j) == -x(j) already, but copy to remove any doubt.
  for (std::size_t j = 1; j < g.points / 2; ++j) values[g.points - j] = values[j];
  return Field(g, std::move(values));
}

Field sample_varphi(const SolitonParams& sp, const Grid& g) {
  const Field profile = sample_capital_phi(sp, g);
  std::vector<Complex> values(g.points);
  for (std::size_t j = 0; j < g.points; ++j) {
    values[j] = std::polar(profile[j].real(), 0.5 * sp.c * g.x(j));
  }
  return Field(g, std::move(values));
}

Field sample_phi(const SolitonParams& sp, const Grid& g) {
  const Field profile = sample_capital_phi(sp, g);
  const auto density = profile.modulus_squared();
  const auto running = cumulative_integral(density, g);
  std::vector<Complex> values(g.points);
  for (std::size_t j = 0; j < g.points; ++j) {
    values[j] = std::polar(profile[j].real(), 0.5 * sp.c * g.x(j) - 0.25 * running[j]);
  }
  return Field(g, std::move(values));
}

double tail_mass(const SolitonParams& sp, double half_length) {
  const double g = sp.model.gamma;
  if (sp.algebraic()) {
    const double rg = std::sqrt(g);
    return (8.0 / rg) * (0.5 * std::numbers::pi - std::atan(sp.c * half_length / rg));
  }
  // Phi^2 ~ (4 k^2 / R) e^{-k|x|} for large |x|.
  const double k = std::sqrt(sp.kappa_sq());
  return 2.0 * (4.0 * k / sp.radius()) * std::exp(-k * half_length);
}

double suggested_half_length(const SolitonParams& sp, double tol) {
  if (sp.algebraic()) {
    const double rg = std::sqrt(sp.model.gamma);
    // (8/rg)(pi/2 - atan(cL/rg)) = (8/rg) atan(rg/(cL)) < tol
    return rg / (sp.c * std::tan(tol * rg / 8.0));
  }
  return 30.0 / std::sqrt(sp.kappa_sq());
}

}  // namespace dnls
