#include "dnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace dnls::fft {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.backward);
    }
  }

  const PlanPair& get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    // FFTW planning is not thread-safe; the mutex covers it. UNALIGNED lets
    // the plans run on std::vector storage through the new-array interface.
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair plans{fftw_plan_dft_1d(len, buf, buf, FFTW_FORWARD, flags),
                   fftw_plan_dft_1d(len, buf, buf, FFTW_BACKWARD, flags)};
    return plans_.emplace(n, plans).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(fftw_plan plan, std::span<std::complex<double>> data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

void forward(std::span<std::complex<double>> data) {
  if (data.empty()) return;
  execute(cache().get(data.size()).forward, data);
}

void backward(std::span<std::complex<double>> data) {
  if (data.empty()) return;
  execute(cache().get(data.size()).backward, data);
}

void inverse(std::span<std::complex<double>> data) {
  backward(data);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
}

}  // namespace dnls::fft
