// Serial reference kernels against their OpenMP versions.
// Usage: bench_kernels [repetitions]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "dnls/evolve.hpp"
#include "dnls/kernels.hpp"
#include "dnls/random_field.hpp"

using namespace dnls;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_per_call(int reps, F&& f) {
  f();
  const auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count() / reps;
}

volatile double sink = 0.0;

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 200;
  std::printf("threads %d, %d repetitions\n", kernels::thread_limit(), reps);
  std::printf("%-12s %9s %12s %12s %8s\n", "kernel", "N", "serial_us", "parallel_us", "speedup");

  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 16, std::size_t{1} << 20}) {
    std::vector<Complex> u(n), ux(n), out(n);
    std::vector<double> phase(n);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = {d(rng), d(rng)};
      ux[j] = {d(rng), d(rng)};
      phase[j] = d(rng);
    }
    const int r = std::max(1, reps * 4096 / static_cast<int>(std::min<std::size_t>(n, 1 << 16)));
    const auto nl = kernels::Nonlinearity::for_gauge(0.25, 0.1);
    auto row = [&](const char* name, double s, double p) {
      std::printf("%-12s %9zu %12.2f %12.2f %8.2f\n", name, n, s, p, s / p);
    };
    row("sums", time_per_call(r, [&] { sink = sink + kernels::serial::sums(u, ux, 0.1).l6; }),
        time_per_call(r, [&] { sink = sink + kernels::parallel::sums(u, ux, 0.1).l6; }));
    row("nonlinear", time_per_call(r, [&] { kernels::serial::nonlinear(nl, u, ux, out); }),
        time_per_call(r, [&] { kernels::parallel::nonlinear(nl, u, ux, out); }));
    row("rotate", time_per_call(r, [&] { kernels::serial::rotate_phase(u, phase, 0.25, out); }),
        time_per_call(r, [&] { kernels::parallel::rotate_phase(u, phase, 0.25, out); }));
    row("max_abs", time_per_call(r, [&] { sink = sink + kernels::serial::max_abs(u); }),
        time_per_call(r, [&] { sink = sink + kernels::parallel::max_abs(u); }));
  }

  for (long long n : {4096LL, 65536LL}) {
    const Grid g = make_grid(40.0, n);
    const Field f = random_smooth_field(g, rng);
    EvolveConfig cfg;
    cfg.b = 0.1;
    cfg.gauge_a = 0.25;
    cfg.dt = 1e-4;
    const int r = std::max(1, reps / 20);
    const double s = time_per_call(r, [&] {
      cfg.serial = true;
      sink = sink + l2_norm(step(f, cfg));
    });
    const double p = time_per_call(r, [&] {
      cfg.serial = false;
      sink = sink + l2_norm(step(f, cfg));
    });
    std::printf("%-12s %9lld %12.2f %12.2f %8.2f\n", "rk4_step", n, s, p, s / p);
  }
  return 0;
}
