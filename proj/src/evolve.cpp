#include "dnls/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dnls/classifier.hpp"
#include "dnls/error.hpp"
#include "dnls/fft.hpp"
#include "dnls/functionals.hpp"
#include "dnls/gauge.hpp"
#include "dnls/kernels.hpp"

namespace dnls {

const char* evolve_status_name(EvolveStatus status) {
  switch (status) {
    case EvolveStatus::Completed:
      return "completed";
    case EvolveStatus::BlowUp:
      return "numerical blow-up";
    case EvolveStatus::StepFailure:
      return "step size underflow";
  }
  return "unknown";
}

namespace {

using Spectrum = std::vector<Complex>;

bool all_finite(const Spectrum& v) {
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

class Stepper {
 public:
  Stepper(const Grid& grid, const EvolveConfig& cfg)
      : grid_(grid),
        cfg_(cfg),
        nl_(kernels::Nonlinearity::for_gauge(cfg.gauge_a, cfg.b)),
        n_(grid.points),
        ik_(n_),
        keep_(n_),
        v_(n_),
        vx_(n_),
        out_(n_) {
    const double cutoff = cfg.dealias * static_cast<double>(n_ / 2);
    for (std::size_t m = 0; m < n_; ++m) {
      const double k = grid.is_nyquist(m) ? 0.0 : grid.wavenumber(m);
      ik_[m] = Complex{0.0, k};
      const auto mm = static_cast<double>(m <= n_ / 2 ? m : n_ - m);
      keep_[m] = !grid.is_nyquist(m) && mm <= cutoff;
    }
  }

  // Propagate spectrum by h: Lawson RK4 around exp(-i k^2 h).
  void advance(Spectrum& hat, double h) {
    prepare(h);
    Spectrum k1(n_), k2(n_), k3(n_), k4(n_), tmp(n_);
    nonlinear(hat, k1);
    for (std::size_t m = 0; m < n_; ++m) tmp[m] = half_[m] * (hat[m] + 0.5 * h * k1[m]);
    nonlinear(tmp, k2);
    for (std::size_t m = 0; m < n_; ++m) tmp[m] = half_[m] * hat[m] + 0.5 * h * k2[m];
    nonlinear(tmp, k3);
    for (std::size_t m = 0; m < n_; ++m) tmp[m] = full_[m] * hat[m] + h * half_[m] * k3[m];
    nonlinear(tmp, k4);
    for (std::size_t m = 0; m < n_; ++m) {
      hat[m] = full_[m] * hat[m] +
               h / 6.0 * (full_[m] * k1[m] + 2.0 * half_[m] * (k2[m] + k3[m]) + k4[m]);
    }
  }

 private:
  void prepare(double h) {
    if (h == cached_h_) return;
    cached_h_ = h;
    half_.resize(n_);
    full_.resize(n_);
    for (std::size_t m = 0; m < n_; ++m) {
      const double k2 = -ik_[m].imag() * ik_[m].imag();  // -k^2
      half_[m] = std::polar(1.0, 0.5 * k2 * h);
      full_[m] = std::polar(1.0, k2 * h);
    }
  }

  void nonlinear(const Spectrum& hat, Spectrum& result) {
    for (std::size_t m = 0; m < n_; ++m) {
      v_[m] = hat[m];
      vx_[m] = ik_[m] * hat[m];
    }
    fft::inverse(v_);
    fft::inverse(vx_);
    if (cfg_.serial) {
      kernels::serial::nonlinear(nl_, v_, vx_, out_);
    } else {
      kernels::parallel::nonlinear(nl_, v_, vx_, out_);
    }
    fft::forward(out_);
    for (std::size_t m = 0; m < n_; ++m) result[m] = keep_[m] ? out_[m] : Complex{};
  }

  Grid grid_;
  EvolveConfig cfg_;
  kernels::Nonlinearity nl_;
  std::size_t n_;
  std::vector<Complex> ik_;
  std::vector<bool> keep_;
  Spectrum v_, vx_, out_;
  Spectrum half_, full_;
  double cached_h_ = std::numeric_limits<double>::quiet_NaN();
};

double stability_limit(const Grid& grid, double max_abs, double c0) {
  return c0 * grid.dx / (1.0 + max_abs * max_abs);
}

double max_abs(const Spectrum& u, bool serial) {
  return serial ? kernels::serial::max_abs(u) : kernels::parallel::max_abs(u);
}

struct Conserved {
  double energy, mass, momentum;
  double energy_scale, momentum_scale;
};

Conserved conserved(const Field& f, const EvolveConfig& cfg) {
  const auto s = field_sums(f);
  const double a = cfg.gauge_a;
  const double coef6 = 0.5 * a * a - 0.25 * a - cfg.b / 6.0;
  return {energy_gauge_a(s, a, cfg.b), s.mass, momentum_gauge_a(s, a),
          0.5 * s.grad_sq + std::abs((a - 0.25) * s.interaction) + std::abs(coef6) * s.l6,
          std::sqrt(s.grad_sq * s.mass) + std::abs(a) * s.l4};
}

double rel(double now, double start, double scale) {
  return std::abs(now - start) / std::max({std::abs(start), scale, 1e-300});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

Field step(const Field& f, const EvolveConfig& cfg) {
  const Grid& g = f.grid();
  const double h = cfg.backward ? -std::abs(cfg.dt) : cfg.dt;
  Spectrum u(f.values().begin(), f.values().end());
  const double limit = stability_limit(g, max_abs(u, cfg.serial), cfg.stability);
  if (std::abs(h) > limit * (1.0 + 1e-12)) {
    throw NumericalFailure("dt = " + fmt(std::abs(h)) + " exceeds the stability guard " +
                           fmt(limit));
  }
  Stepper stepper(g, cfg);
  fft::forward(u);
  stepper.advance(u, h);
  fft::inverse(u);
  if (!all_finite(u)) throw NumericalFailure("numerical blow-up: non-finite values");
  return Field(g, std::move(u));
}

Trajectory evolve(const Field& f0, const EvolveConfig& cfg, const std::optional<Monitor>& monitor) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end >= 0.0) || cfg.record_every < 1 || !(cfg.dealias > 0.0) ||
      cfg.dealias > 1.0) {
    throw DomainError("invalid evolution config");
  }
  const Grid& g = f0.grid();
  const ModelParams params = ModelParams::from_b(cfg.b);
  const Frame frame = cfg.gauge_a == 0.25 ? Frame::Gauge : Frame::Dnls;
  const bool track_nehari = monitor && (cfg.gauge_a == 0.0 || cfg.gauge_a == 0.25);
  const double sign = cfg.backward ? -1.0 : 1.0;

  Trajectory traj;
  const Conserved c0 = conserved(f0, cfg);
  const double grad0 = std::sqrt(field_sums(f0).grad_sq);
  auto record = [&](double t, const Field& f) {
    const Conserved c = conserved(f, cfg);
    DriftRecord d{t, rel(c.energy, c0.energy, c0.energy_scale), rel(c.mass, c0.mass, 0.0),
                  rel(c.momentum, c0.momentum, c0.momentum_scale)};
    traj.max_drift = std::max({traj.max_drift, d.energy, d.mass, d.momentum});
    traj.drift.push_back(d);
    traj.snapshots.push_back({t, f});
    if (track_nehari) {
      const auto si = invariant_summary(f, params, frame);
      traj.k_sign.emplace_back(t, member(si, params, monitor->omega, monitor->c).k_sign);
    }
  };
  if (track_nehari) {
    const auto si = invariant_summary(f0, params, frame);
    const ActionPowers pw = action_powers(si.sums(), params, monitor->omega, monitor->c, frame);
    traj.gradient_bound = 8.0 * pw.action() + 0.5 * monitor->c * monitor->c * si.mass;
  }
  traj.max_grad_sq = grad0 * grad0;
  record(0.0, f0);

  Stepper stepper(g, cfg);
  Spectrum hat(f0.values().begin(), f0.values().end());
  Spectrum phys = hat;
  fft::forward(hat);
  double t = 0.0;
  double dt = cfg.dt;
  traj.dt_used = cfg.dt;
  const double t_goal = cfg.t_end;
  long long accepted = 0;

  while (t_goal - t > 1e-14 * std::max(1.0, t_goal)) {
    dt = std::min(dt, stability_limit(g, max_abs(phys, cfg.serial), cfg.stability));
    double h = std::min(dt, t_goal - t);
    Spectrum next;
    for (;;) {
      if (h < cfg.dt_floor && h < t_goal - t) {
        traj.status = EvolveStatus::StepFailure;
        traj.message = "step size fell below " + fmt(cfg.dt_floor) + " at t = " + fmt(sign * t);
        return traj;
      }
      next = hat;
      if (!cfg.adaptive) {
        stepper.advance(next, sign * h);
        break;
      }
      Spectrum coarse = hat;
      stepper.advance(coarse, sign * h);
      stepper.advance(next, 0.5 * sign * h);
      stepper.advance(next, 0.5 * sign * h);
      double diff = 0.0, norm = 0.0;
      for (std::size_t m = 0; m < next.size(); ++m) {
        diff += std::norm(next[m] - coarse[m]);
        norm += std::norm(next[m]);
      }
      const double err = norm > 0.0 ? std::sqrt(diff / norm) : std::sqrt(diff);
      if (std::isfinite(err) && err < cfg.step_tolerance) break;
      if (!std::isfinite(err)) {
        traj.status = EvolveStatus::BlowUp;
        traj.message = "numerical blow-up: non-finite values at t = " + fmt(sign * t);
        return traj;
      }
      h *= 0.5;
      dt = h;
    }
    hat = std::move(next);
    t += h;
    ++accepted;
    traj.dt_used = std::min(traj.dt_used, h);

    phys = hat;
    fft::inverse(phys);
    if (!all_finite(phys)) {
      traj.status = EvolveStatus::BlowUp;
      traj.message = "numerical blow-up: non-finite values at t = " + fmt(sign * t);
      return traj;
    }
    const double peak = max_abs(phys, cfg.serial);
    double grad_sq = 0.0;
    for (std::size_t m = 0; m < hat.size(); ++m) {
      if (!g.is_nyquist(m)) grad_sq += std::norm(g.wavenumber(m) * hat[m]);
    }
    grad_sq *= g.dx / static_cast<double>(hat.size());
    traj.max_grad_sq = std::max(traj.max_grad_sq, grad_sq);
    if (peak > 1e6 || std::sqrt(grad_sq) > 1e4 * std::max(grad0, 1e-300)) {
      traj.status = EvolveStatus::BlowUp;
      traj.message = "numerical blow-up at t = " + fmt(sign * t) + " (max|u| = " + fmt(peak) + ")";
      traj.snapshots.push_back({sign * t, Field(g, phys)});
      return traj;
    }
    const bool last = t_goal - t <= 1e-14 * std::max(1.0, t_goal);
    if (accepted % cfg.record_every == 0 || last) record(sign * t, Field(g, phys));
  }
  traj.steps = accepted;
  return traj;
}

double gauge_consistency(const Field& f0, double b, double t_end, EvolveConfig base) {
  if (t_end == 0.0) return 0.0;
  base.b = b;
  base.t_end = t_end;
  base.record_every = 1 << 30;
  EvolveConfig plain = base;
  plain.gauge_a = 0.0;
  EvolveConfig gauged = base;
  gauged.gauge_a = 0.25;
  const Trajectory a = evolve(f0, plain);
  const Trajectory c = evolve(gauge_transform(f0, 0.25), gauged);
  if (a.status != EvolveStatus::Completed || c.status != EvolveStatus::Completed) {
    throw NumericalFailure("gauge consistency run failed: " +
                           (a.status != EvolveStatus::Completed ? a.message : c.message));
  }
  return l2_distance(gauge_transform(a.snapshots.back().field, 0.25), c.snapshots.back().field);
}

double modulus_shift(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const std::size_t n = f.size();
  Spectrum a(n), b(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = std::abs(f[j]);
    b[j] = std::abs(g[j]);
  }
  fft::forward(a);
  fft::forward(b);
  for (std::size_t m = 0; m < n; ++m) a[m] = b[m] * std::conj(a[m]);
  fft::inverse(a);
  std::size_t best = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (a[j].real() > a[best].real()) best = j;
  }
  const double ym = a[(best + n - 1) % n].real();
  const double y0 = a[best].real();
  const double yp = a[(best + 1) % n].real();
  const double denom = ym - 2.0 * y0 + yp;
  const double frac = denom != 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
  auto lag = static_cast<double>(best);
  if (best > n / 2) lag -= static_cast<double>(n);
  return (lag + frac) * f.grid().dx;
}

}  // namespace dnls
