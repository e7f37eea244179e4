#include "dnls/gauge.hpp"

#include "dnls/kernels.hpp"

namespace dnls {

Field gauge_transform(const Field& f, double a) {
  if (a == 0.0) return f;
  const auto phase = cumulative_integral(f.modulus_squared(), f.grid());
  std::vector<Complex> out(f.size());
  kernels::parallel::rotate_phase(f.values(), phase, a, out);
  return Field(f.grid(), std::move(out));
}

}  // namespace dnls
