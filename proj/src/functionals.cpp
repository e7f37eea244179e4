#include "dnls/functionals.hpp"

#include <numbers>
#include <string>

#include "dnls/error.hpp"

namespace dnls {

const char* frame_name(Frame frame) { return frame == Frame::Dnls ? "dnls" : "gauge"; }

Frame parse_frame(const std::string& name) {
  if (name == "dnls") return Frame::Dnls;
  if (name == "gauge") return Frame::Gauge;
  throw DomainError("unknown frame '" + name + "' (expected dnls or gauge)");
}

kernels::Sums field_sums(const Field& f) {
  const Field fx = spectral_derivative(f);
  return kernels::parallel::sums(f.values(), fx.values(), f.grid().dx);
}

double energy_gauge_a(const kernels::Sums& s, double a, double b) {
  return 0.5 * s.grad_sq + (a - 0.25) * s.interaction +
         (0.5 * a * a - 0.25 * a - b / 6.0) * s.l6;
}

double momentum_gauge_a(const kernels::Sums& s, double a) { return s.p_lin + a * s.l4; }

double ActionPowers::action(double lambda) const {
  const double l2 = lambda * lambda;
  return l2 * (quadratic + l2 * (quartic + l2 * sextic));
}

double ActionPowers::nehari(double lambda) const {
  const double l2 = lambda * lambda;
  return lambda * (2.0 * quadratic + l2 * (4.0 * quartic + 6.0 * l2 * sextic));
}

ActionPowers action_powers(const kernels::Sums& s, const ModelParams& p, double omega, double c,
                           Frame frame) {
  const double quad = 0.5 * (s.grad_sq + omega * s.mass + c * s.p_lin);
  if (frame == Frame::Gauge) {
    return {quad, 0.125 * c * s.l4, -p.gamma / 32.0 * s.l6};
  }
  return {quad, -0.25 * s.interaction, -p.b / 6.0 * s.l6};
}

FunctionalReport report_from_sums(const kernels::Sums& s, const ModelParams& p, double omega,
                                  double c, Frame frame) {
  const double a = frame == Frame::Gauge ? 0.25 : 0.0;
  const ActionPowers pw = action_powers(s, p, omega, c, frame);
  FunctionalReport r;
  r.frame = frame;
  r.omega = omega;
  r.c = c;
  r.energy = energy_gauge_a(s, a, p.b);
  r.mass = s.mass;
  r.momentum = momentum_gauge_a(s, a);
  r.action = r.energy + 0.5 * omega * r.mass + 0.5 * c * r.momentum;
  r.nehari = pw.nehari();
  r.ell = s.grad_sq + omega * s.mass + c * s.p_lin;
  r.ii = r.action - 0.25 * r.nehari;
  r.grad_sq = s.grad_sq;
  r.l4 = s.l4;
  r.l6 = s.l6;
  return r;
}

FunctionalReport report(const Field& f, const ModelParams& p, double omega, double c,
                        Frame frame) {
  return report_from_sums(field_sums(f), p, omega, c, frame);
}

double energy(const Field& f, const ModelParams& p, Frame frame) {
  return energy_gauge_a(field_sums(f), frame == Frame::Gauge ? 0.25 : 0.0, p.b);
}

double mass(const Field& f) { return integrate(f.modulus_squared(), f.grid()); }

double momentum(const Field& f, Frame frame) {
  return momentum_gauge_a(field_sums(f), frame == Frame::Gauge ? 0.25 : 0.0);
}

double action(const Field& f, const ModelParams& p, double omega, double c, Frame frame) {
  return report(f, p, omega, c, frame).action;
}

double nehari(const Field& f, const ModelParams& p, double omega, double c, Frame frame) {
  return report(f, p, omega, c, frame).nehari;
}

double ell(const Field& f, double omega, double c) {
  const auto s = field_sums(f);
  return s.grad_sq + omega * s.mass + c * s.p_lin;
}

double gn_ratio(const Field& f) {
  const auto s = field_sums(f);
  if (!(s.mass > 0.0) || !(s.grad_sq > 0.0)) {
    throw DomainError("gn_ratio needs a field with nonzero mass and gradient");
  }
  const double sharp = 4.0 / (std::numbers::pi * std::numbers::pi);
  return s.l6 / (sharp * s.mass * s.mass * s.grad_sq);
}

}  // namespace dnls
