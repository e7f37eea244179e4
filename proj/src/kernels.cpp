#include "dnls/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace dnls::kernels {

int thread_limit() {
  static const int limit = [] {
    if (const char* env = std::getenv("DNLS_WELL_THREADS")) {
      try {
        const int n = std::stoi(env);
        if (n > 0) return n;
      } catch (const std::exception&) {
      }
    }
    return omp_get_max_threads();
  }();
  return limit;
}

namespace {

// Per-sample contributions. Im(u_x conj(u)) gives <i u_x, u> = -int Im(u_x conj u).
struct Terms {
  double m, g, p, q, l4, l6;
};

inline Terms terms_at(Complex u, Complex ux) {
  const double m = std::norm(u);
  const double im = (ux * std::conj(u)).imag();
  return {m, std::norm(ux), -im, -m * im, m * m, m * m * m};
}

inline Complex nonlinear_at(const Nonlinearity& nl, Complex v, Complex vx) {
  const double m = std::norm(v);
  return -nl.deriv * m * vx + nl.conj_deriv * v * v * std::conj(vx) +
         Complex{0.0, nl.quintic * m * m} * v;
}

}  // namespace

namespace serial {

Sums sums(std::span<const Complex> u, std::span<const Complex> ux, double dx) {
  Sums s;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const Terms t = terms_at(u[j], ux[j]);
    s.mass += t.m;
    s.grad_sq += t.g;
    s.p_lin += t.p;
    s.interaction += t.q;
    s.l4 += t.l4;
    s.l6 += t.l6;
  }
  return {s.mass * dx, s.grad_sq * dx, s.p_lin * dx, s.interaction * dx, s.l4 * dx, s.l6 * dx};
}

void nonlinear(const Nonlinearity& nl, std::span<const Complex> v, std::span<const Complex> vx,
               std::span<Complex> out) {
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = nonlinear_at(nl, v[j], vx[j]);
}

void rotate_phase(std::span<const Complex> in, std::span<const double> phase, double a,
                  std::span<Complex> out) {
  for (std::size_t j = 0; j < in.size(); ++j) out[j] = std::polar(1.0, a * phase[j]) * in[j];
}

double max_abs(std::span<const Complex> u) {
  double m = 0.0;
  for (const auto& z : u) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace serial

namespace parallel {

Sums sums(std::span<const Complex> u, std::span<const Complex> ux, double dx) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  double m = 0, g = 0, p = 0, q = 0, l4 = 0, l6 = 0;
#pragma omp parallel for reduction(+ : m, g, p, q, l4, l6) num_threads(thread_limit()) \
    if (u.size() > kParallelThreshold) schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const Terms t = terms_at(u[j], ux[j]);
    m += t.m;
    g += t.g;
    p += t.p;
    q += t.q;
    l4 += t.l4;
    l6 += t.l6;
  }
  return {m * dx, g * dx, p * dx, q * dx, l4 * dx, l6 * dx};
}

void nonlinear(const Nonlinearity& nl, std::span<const Complex> v, std::span<const Complex> vx,
               std::span<Complex> out) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for num_threads(thread_limit()) if (v.size() > kParallelThreshold) \
    schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) out[j] = nonlinear_at(nl, v[j], vx[j]);
}

void rotate_phase(std::span<const Complex> in, std::span<const double> phase, double a,
                  std::span<Complex> out) {
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for num_threads(thread_limit()) if (in.size() > kParallelThreshold) \
    schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) out[j] = std::polar(1.0, a * phase[j]) * in[j];
}

double max_abs(std::span<const Complex> u) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) num_threads(thread_limit()) \
    if (u.size() > kParallelThreshold) schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) m = std::max(m, std::abs(u[j]));
  return m;
}

}  // namespace parallel
}  // namespace dnls::kernels
