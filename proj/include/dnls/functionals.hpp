#pragma once

#include <string>

#include "dnls/field.hpp"
#include "dnls/kernels.hpp"
#include "dnls/solitons.hpp"

namespace dnls {

/// DNLS: the original variables u. GAUGE: v = G_{1/4}(u).
enum class Frame { Dnls, Gauge };

const char* frame_name(Frame frame);
Frame parse_frame(const std::string& name);

/// Discrete integrals of f and its spectral derivative.
kernels::Sums field_sums(const Field& f);

/// Energy and momentum of the gauge-a equation. a = 0 is the DNLS frame,
/// a = 1/4 the gauge frame.
double energy_gauge_a(const kernels::Sums& s, double a, double b);
double momentum_gauge_a(const kernels::Sums& s, double a);

/// Coefficients of lambda^2, lambda^4, lambda^6 in S(lambda f).
struct ActionPowers {
  double quadratic = 0.0;
  double quartic = 0.0;
  double sextic = 0.0;

  [[nodiscard]] double action(double lambda = 1.0) const;
  /// d/dlambda S(lambda f) at lambda.
  [[nodiscard]] double nehari(double lambda = 1.0) const;
};
ActionPowers action_powers(const kernels::Sums& s, const ModelParams& p, double omega, double c,
                           Frame frame);

struct FunctionalReport {
  Frame frame = Frame::Gauge;
  double omega = 0.0;
  double c = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double action = 0.0;
  double nehari = 0.0;
  double ell = 0.0;
  double ii = 0.0;  // action - nehari/4
  double grad_sq = 0.0;
  double l4 = 0.0;
  double l6 = 0.0;
};

FunctionalReport report(const Field& f, const ModelParams& p, double omega, double c, Frame frame);
FunctionalReport report_from_sums(const kernels::Sums& s, const ModelParams& p, double omega,
                                  double c, Frame frame);

double energy(const Field& f, const ModelParams& p, Frame frame);
double mass(const Field& f);
double momentum(const Field& f, Frame frame);
double action(const Field& f, const ModelParams& p, double omega, double c, Frame frame);
double nehari(const Field& f, const ModelParams& p, double omega, double c, Frame frame);
double ell(const Field& f, double omega, double c);

/// ||f||_6^6 / ((4/pi^2) ||f||_2^4 ||f_x||_2^2); at most 1. Zero field rejected.
double gn_ratio(const Field& f);

}  // namespace dnls
