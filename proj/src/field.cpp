#include "dnls/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dnls/error.hpp"
#include "dnls/fft.hpp"

namespace dnls {

std::vector<double> Grid::coordinates() const {
  std::vector<double> xs(points);
  for (std::size_t j = 0; j < points; ++j) xs[j] = x(j);
  return xs;
}

double Grid::wavenumber(std::size_t m) const {
  const auto n = static_cast<long long>(points);
  auto mm = static_cast<long long>(m);
  if (mm > n / 2) mm -= n;
  return std::numbers::pi * static_cast<double>(mm) / half_length;
}

Grid make_grid(double half_length, long long points) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw DomainError("grid half-length must be positive and finite, got " +
                      std::to_string(half_length));
  }
  if (points < 8 || points % 2 != 0) {
    throw DomainError("grid point count must be even and >= 8, got " + std::to_string(points));
  }
  const auto n = static_cast<std::size_t>(points);
  return Grid{half_length, n, 2.0 * half_length / static_cast<double>(n)};
}

Field::Field(const Grid& grid) : grid_(grid), values_(grid.points, Complex{0.0, 0.0}) {}

Field::Field(const Grid& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.points) {
    throw DomainError("field has " + std::to_string(values_.size()) +
                      " samples but the grid has " + std::to_string(grid_.points));
  }
  for (const auto& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("field contains non-finite samples");
    }
  }
}

Field Field::from_function(const Grid& grid, const std::function<Complex(double)>& f) {
  std::vector<Complex> values(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) values[j] = f(grid.x(j));
  return Field(grid, std::move(values));
}

std::vector<double> Field::modulus_squared() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) out[j] = std::norm(values_[j]);
  return out;
}

Field Field::scaled(Complex factor) const {
  auto values = values_;
  for (auto& z : values) z *= factor;
  return Field(grid_, std::move(values));
}

void require_same_grid(const Field& lhs, const Field& rhs) {
  if (!(lhs.grid() == rhs.grid())) throw DomainError("fields live on different grids");
}

Field operator+(const Field& lhs, const Field& rhs) {
  require_same_grid(lhs, rhs);
  auto values = lhs.values_;
  for (std::size_t j = 0; j < values.size(); ++j) values[j] += rhs.values_[j];
  return Field(lhs.grid_, std::move(values));
}

Field operator-(const Field& lhs, const Field& rhs) {
  require_same_grid(lhs, rhs);
  auto values = lhs.values_;
  for (std::size_t j = 0; j < values.size(); ++j) values[j] -= rhs.values_[j];
  return Field(lhs.grid_, std::move(values));
}

void spectral_derivative(const Grid& grid, std::span<const Complex> in, std::span<Complex> out) {
  std::copy(in.begin(), in.end(), out.begin());
  fft::forward(out);
  const Complex i{0.0, 1.0};
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = grid.is_nyquist(m) ? Complex{} : i * grid.wavenumber(m) * out[m];
  }
  fft::inverse(out);
}

Field spectral_derivative(const Field& f) {
  std::vector<Complex> out(f.size());
  spectral_derivative(f.grid(), f.values(), out);
  return Field(f.grid(), std::move(out));
}

double integrate(std::span<const double> samples, const Grid& grid) {
  double sum = 0.0;
  for (double s : samples) sum += s;
  return grid.dx * sum;
}

double inner_re(const Field& v, const Field& w) {
  require_same_grid(v, w);
  double sum = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) sum += (v[j] * std::conj(w[j])).real();
  return v.grid().dx * sum;
}

double l2_norm(const Field& f) { return std::sqrt(inner_re(f, f)); }

double l2_distance(const Field& v, const Field& w) { return l2_norm(v - w); }

std::vector<double> cumulative_integral(std::span<const double> g, const Grid& grid) {
  const std::size_t n = g.size();
  if (n != grid.points) throw DomainError("sample count does not match grid");
  std::vector<Complex> spec(g.begin(), g.end());
  fft::forward(spec);
  const double mean = spec[0].real() / static_cast<double>(n);
  spec[0] = Complex{};
  const Complex i{0.0, 1.0};
  for (std::size_t m = 1; m < n; ++m) {
    spec[m] = grid.is_nyquist(m) ? Complex{} : spec[m] / (i * grid.wavenumber(m));
  }
  fft::inverse(spec);
  std::vector<double> out(n);
  const double x0 = grid.x(0);
  const double base = spec[0].real();
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = mean * (grid.x(j) - x0) + (spec[j].real() - base);
  }
  return out;
}

Field fourier_shift(const Field& f, double shift) {
  std::vector<Complex> spec(f.values().begin(), f.values().end());
  fft::forward(spec);
  const auto& grid = f.grid();
  for (std::size_t m = 0; m < spec.size(); ++m) {
    if (grid.is_nyquist(m)) {
      spec[m] = Complex{};
      continue;
    }
    spec[m] *= std::polar(1.0, -grid.wavenumber(m) * shift);
  }
  fft::inverse(spec);
  return Field(grid, std::move(spec));
}

}  // namespace dnls
