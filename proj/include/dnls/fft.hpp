#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace dnls::fft {

/// In-place unnormalized complex DFTs of length `data.size()`, backed by
/// FFTW. Plans are created once per length and shared; execution is
/// thread-safe.
void forward(std::span<std::complex<double>> data);
void backward(std::span<std::complex<double>> data);

/// backward() followed by division by N.
void inverse(std::span<std::complex<double>> data);

}  // namespace dnls::fft
