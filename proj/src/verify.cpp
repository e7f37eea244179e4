#include "dnls/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "dnls/closedform.hpp"
#include "dnls/error.hpp"
#include "dnls/evolve.hpp"
#include "dnls/gauge.hpp"
#include "dnls/oracle.hpp"
#include "dnls/random_field.hpp"

namespace dnls::verify {

bool SuiteResult::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

double SuiteResult::worst_error() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.error);
  return worst;
}

std::vector<std::string> suite_names() { return {"quad", "ode", "mass", "momentum", "gauge"}; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void add(SuiteResult& r, const std::string& name, double error, double tol) {
  r.checks.push_back({name, error, tol, std::isfinite(error) && error <= tol});
}

std::string label(double b, double omega, double c) {
  std::ostringstream os;
  os.precision(6);
  os << "b=" << b << " omega=" << omega << " c=" << c;
  return os.str();
}

double relative(double a, double ref) { return std::abs(a - ref) / std::max(std::abs(ref), 1e-300); }

// b values covering gamma > 0, gamma = 0 and gamma < 0.
constexpr double kRegimes[] = {0.1, -3.0 / 16.0, -3.0 / 8.0};

SuiteResult quad_suite() {
  SuiteResult r{"quad", {}};
  using oracle::adaptive_quad;
  add(r, "int 1/(cosh+1)",
      std::abs(adaptive_quad([](double y) { return 1.0 / (std::cosh(y) + 1.0); }, -kInf, kInf) - 2.0),
      1e-10);
  add(r, "int sech^2",
      std::abs(adaptive_quad([](double y) { return 1.0 / std::pow(std::cosh(y), 2); }, -kInf, kInf) -
               2.0),
      1e-10);
  for (double alpha : {-0.9, -0.5, 0.0, 0.5, 0.95, 1.0, 1.05, 3.0, 10.0}) {
    for (int power : {1, 2}) {
      const double q = adaptive_quad(
          [&](double y) { return std::pow(std::cosh(y) + alpha, -power); }, -kInf, kInf, 1e-12);
      std::ostringstream name;
      name << "cosh_integral(" << alpha << "," << power << ")";
      add(r, name.str(), relative(cosh_integral(alpha, power), q), 1e-9);
    }
  }
  return r;
}

SuiteResult ode_suite() {
  SuiteResult r{"ode", {}};
  const double sets[][3] = {{0.0, 1.0, 0.0}, {3.0 / 16.0, 1.0, 1.0}, {0.1, 2.0, -1.0},
                            {-3.0 / 16.0, 1.0, -1.0}, {-3.0 / 8.0, 1.0, -1.6}};
  for (const auto& s : sets) {
    const ModelParams p = ModelParams::from_b(s[0]);
    const SolitonParams sp = make_soliton(p, s[1], s[2]);
    const double half = 40.0 / std::sqrt(sp.kappa_sq());
    const auto shot = oracle::ode_profile(p, s[1], s[2], half, 2048);
    const Field exact = sample_capital_phi(sp, make_grid(half, 2048));
    double err = 0.0;
    for (std::size_t j = 0; j < exact.size(); ++j) {
      err = std::max(err, std::abs(shot.samples[j] - exact[j].real()));
    }
    add(r, "shooting " + label(s[0], s[1], s[2]), err, 1e-6);
  }
  return r;
}

SuiteResult scalar_suite(const std::string& which, unsigned long long seed) {
  SuiteResult r{which, {}};
  std::mt19937_64 rng(seed);
  const bool is_mass = which == "mass";
  auto closed = [&](const ModelParams& p, double omega, double c) {
    return is_mass ? soliton_mass(p, omega, c) : soliton_momentum(p, omega, c);
  };
  auto quad = [&](const ModelParams& p, double omega, double c) {
    return is_mass ? oracle::quad_soliton_mass(p, omega, c)
                   : oracle::quad_soliton_momentum(p, omega, c);
  };
  for (double b : kRegimes) {
    const ModelParams p = ModelParams::from_b(b);
    for (const auto& [omega, c] : admissible_samples(p, 10, rng)) {
      const double ref = quad(p, omega, c);
      const double scale = is_mass ? std::abs(ref) : std::max(std::abs(ref), soliton_mass(p, omega, c));
      add(r, which + " " + label(b, omega, c), std::abs(closed(p, omega, c) - ref) / scale, 1e-8);
    }
  }
  for (double b : {0.0, 0.1, -0.1}) {
    const ModelParams p = ModelParams::from_b(b);
    for (double omega : {1.0, 4.0}) {
      const double c = 2.0 * std::sqrt(omega);
      const double ref = quad(p, omega, c);
      const double scale = is_mass ? std::abs(ref) : std::max(std::abs(ref), soliton_mass(p, omega, c));
      add(r, which + " algebraic " + label(b, omega, c), std::abs(closed(p, omega, c) - ref) / scale,
          1e-4);
    }
  }
  return r;
}

SuiteResult gauge_suite() {
  SuiteResult r{"gauge", {}};
  const Grid g = make_grid(20.0, 256);
  const Field f = gaussian(g, 1.0, 1.5, 0.0, 0.5);
  add(r, "composition", l2_distance(gauge_transform(gauge_transform(f, 0.3), -0.1),
                                    gauge_transform(f, 0.2)), 1e-12);
  const Grid gs = make_grid(40.0, 1024);
  const SolitonParams sp = make_soliton(ModelParams::from_b(0.1), 1.0, 1.0);
  const Field phi = gauge_transform(sample_phi(sp, gs), 0.25);
  const Field varphi = sample_varphi(sp, gs);
  // Compare up to a constant phase, estimated from the overlap.
  Complex overlap{0.0, 0.0};
  for (std::size_t j = 0; j < gs.points; ++j) overlap += varphi[j] * std::conj(phi[j]);
  const Field aligned = phi.scaled(std::polar(1.0, std::arg(overlap)));
  add(r, "soliton frames", l2_distance(aligned, varphi), 1e-6);
  EvolveConfig cfg;
  cfg.dt = 2e-3;
  add(r, "flow commutes with gauge (gaussian, T=0.1)", gauge_consistency(f, 0.0, 0.1, cfg), 1e-5);
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, unsigned long long seed) {
  if (name == "quad") return quad_suite();
  if (name == "ode") return ode_suite();
  if (name == "mass" || name == "momentum") return scalar_suite(name, seed);
  if (name == "gauge") return gauge_suite();
  throw DomainError("unknown verify suite '" + name + "'");
}

}  // namespace dnls::verify
