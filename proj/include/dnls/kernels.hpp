#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace dnls::kernels {

using Complex = std::complex<double>;

/// Discrete integrals (dx * sum) needed by every functional.
struct Sums {
  double mass = 0.0;         // int |u|^2
  double grad_sq = 0.0;      // int |u_x|^2
  double p_lin = 0.0;        // <i u_x, u>
  double interaction = 0.0;  // <i |u|^2 u_x, u>
  double l4 = 0.0;           // int |u|^4
  double l6 = 0.0;           // int |u|^6
};

/// Coefficients of the gauge-a nonlinearity written as
/// v_t = i v_xx - deriv |v|^2 v_x + conj_deriv v^2 conj(v_x) + i quintic |v|^4 v.
struct Nonlinearity {
  double deriv = 1.0;
  double conj_deriv = 0.0;
  double quintic = 0.0;

  static Nonlinearity for_gauge(double a, double b) {
    return {1.0 - 2.0 * a, 2.0 * a, a * a + 0.5 * a + b};
  }
};

/// Reference implementations, plain loops.
namespace serial {
Sums sums(std::span<const Complex> u, std::span<const Complex> ux, double dx);
void nonlinear(const Nonlinearity& nl, std::span<const Complex> v, std::span<const Complex> vx,
               std::span<Complex> out);
void rotate_phase(std::span<const Complex> in, std::span<const double> phase, double a,
                  std::span<Complex> out);
double max_abs(std::span<const Complex> u);
}  // namespace serial

/// OpenMP versions. Short arrays run on the calling thread.
namespace parallel {
Sums sums(std::span<const Complex> u, std::span<const Complex> ux, double dx);
void nonlinear(const Nonlinearity& nl, std::span<const Complex> v, std::span<const Complex> vx,
               std::span<Complex> out);
void rotate_phase(std::span<const Complex> in, std::span<const double> phase, double a,
                  std::span<Complex> out);
double max_abs(std::span<const Complex> u);
}  // namespace parallel

/// Below this length the parallel kernels do not fork.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Thread count honoured by the parallel kernels: DNLS_WELL_THREADS if set
/// and positive, otherwise the OpenMP default.
int thread_limit();

}  // namespace dnls::kernels
