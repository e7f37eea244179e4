#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dnls {

using Complex = std::complex<double>;

/// Uniform periodic grid on [-L, L) with N points, x_j = -L + j*dx.
struct Grid {
  double half_length = 0.0;
  std::size_t points = 0;
  double dx = 0.0;

  /// Grid coordinate of sample j. Computed as (j - N/2)*dx so that
  /// x(N-j) == -x(j) holds bit-exactly.
  [[nodiscard]] double x(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(points / 2)) * dx;
  }
  [[nodiscard]] double length() const { return 2.0 * half_length; }
  [[nodiscard]] std::vector<double> coordinates() const;

  /// Angular wavenumber of FFT bin m (standard FFT ordering). The Nyquist
  /// bin reports +pi*N/(2L).
  [[nodiscard]] double wavenumber(std::size_t m) const;
  [[nodiscard]] bool is_nyquist(std::size_t m) const { return m == points / 2; }

  bool operator==(const Grid&) const = default;
};

/// Validates L > 0, N even, N >= 8.
Grid make_grid(double half_length, long long points);

/// Complex samples on a Grid. All samples are finite by construction.
class Field {
 public:
  explicit Field(const Grid& grid);  // zeros
  Field(const Grid& grid, std::vector<Complex> values);

  static Field from_function(const Grid& grid, const std::function<Complex(double)>& f);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] std::span<const Complex> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const Complex& operator[](std::size_t j) const { return values_[j]; }

  /// Pointwise |f|^2.
  [[nodiscard]] std::vector<double> modulus_squared() const;

  [[nodiscard]] Field scaled(Complex factor) const;

  friend Field operator+(const Field& lhs, const Field& rhs);
  friend Field operator-(const Field& lhs, const Field& rhs);

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// Throws DomainError unless both fields live on the same grid.
void require_same_grid(const Field& lhs, const Field& rhs);

/// Fourier-collocation derivative; the Nyquist mode is discarded.
Field spectral_derivative(const Field& f);
void spectral_derivative(const Grid& grid, std::span<const Complex> in, std::span<Complex> out);

/// Periodic rectangle rule, dx * sum(f).
double integrate(std::span<const double> samples, const Grid& grid);

/// <v, w> = Re \int v conj(w) dx.
double inner_re(const Field& v, const Field& w);

/// L2 norm and L2 distance.
double l2_norm(const Field& f);
double l2_distance(const Field& v, const Field& w);

/// Running integral F(x_j) = \int_{-L}^{x_j} g, computed spectrally:
/// mean part integrated exactly, zero-mean part through division by ik.
/// Exact for band-limited g (up to the discarded Nyquist mode).
std::vector<double> cumulative_integral(std::span<const double> g, const Grid& grid);

/// Translation by an arbitrary shift through a Fourier phase ramp:
/// result(x) = f(x - shift) for the band-limited interpolant of f.
Field fourier_shift(const Field& f, double shift);

}  // namespace dnls
