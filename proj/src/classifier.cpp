#include "dnls/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "dnls/closedform.hpp"
#include "dnls/error.hpp"

namespace dnls {
namespace {

constexpr double kDeadBand = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

double frame_a(Frame frame) { return frame == Frame::Gauge ? 0.25 : 0.0; }

double snap(double value, double scale) {
  return std::abs(value) <= kDeadBand * scale ? 0.0 : value;
}

// Real roots of a x^2 + b x + c, ascending, computed without cancellation.
std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc <= 0.0) return {};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = q != 0.0 ? c / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

// A point strictly inside (lo, hi), lo >= 0.
double interior(double lo, double hi) {
  if (std::isinf(hi)) return std::max(2.0 * lo, lo + 1.0);
  return 0.5 * (lo + hi);
}

// Magnitudes used to decide when energy and momentum count as zero.
double energy_scale(const ScalarInvariants& si, const ModelParams& p) {
  const double a = frame_a(si.frame);
  return 0.5 * si.grad_sq + std::abs((a - 0.25) * si.interaction) +
         std::abs(0.5 * a * a - 0.25 * a - p.b / 6.0) * si.l6;
}

double momentum_scale(const ScalarInvariants& si) {
  return std::sqrt(si.grad_sq * si.mass) + frame_a(si.frame) * si.l4;
}

int dead_band_sign(double value, double scale) {
  if (std::abs(value) <= kDeadBand * scale) return 0;
  return value > 0.0 ? 1 : -1;
}

bool has_plus(Verdict v) { return v == Verdict::APlus || v == Verdict::Both; }
bool has_minus(Verdict v) { return v == Verdict::AMinus || v == Verdict::Both; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

kernels::Sums ScalarInvariants::sums() const {
  return {mass, grad_sq, p_lin, interaction, l4, l6};
}

ScalarInvariants invariants_from_sums(const kernels::Sums& s, const ModelParams& p, Frame frame) {
  const double a = frame_a(frame);
  ScalarInvariants si;
  si.frame = frame;
  si.grad_sq = s.grad_sq;
  si.mass = s.mass;
  si.p_lin = s.p_lin;
  si.l4 = s.l4;
  si.l6 = s.l6;
  si.interaction = s.interaction;
  si.energy = energy_gauge_a(s, a, p.b);
  si.momentum = momentum_gauge_a(s, a);
  return si;
}

ScalarInvariants invariant_summary(const Field& f, const ModelParams& p, Frame frame) {
  return invariants_from_sums(field_sums(f), p, frame);
}

ScalarInvariants modulate(const ScalarInvariants& si, const ModelParams& p, double kappa) {
  kernels::Sums s = si.sums();
  s.grad_sq = si.grad_sq + kappa * kappa * si.mass - 2.0 * kappa * si.p_lin;
  s.p_lin = si.p_lin - kappa * si.mass;
  s.interaction = si.interaction - kappa * si.l4;
  return invariants_from_sums(s, p, si.frame);
}

Membership member(const ScalarInvariants& si, const ModelParams& p, double omega, double c) {
  const double d = d_value(p, omega, c);
  const ActionPowers pw = action_powers(si.sums(), p, omega, c, si.frame);
  Membership m;
  m.action = pw.action();
  m.d = d;
  m.nehari = pw.nehari();
  m.in_well = m.action - d < -kDeadBand * (std::abs(m.action) + d);
  const double k_scale = si.grad_sq + omega * si.mass + std::abs(c * si.p_lin) +
                         4.0 * std::abs(pw.quartic) + 6.0 * std::abs(pw.sextic);
  m.k_sign = dead_band_sign(m.nehari, k_scale);
  return m;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::APlus:
      return "A_plus";
    case Verdict::AMinus:
      return "A_minus";
    case Verdict::Both:
      return "both";
    case Verdict::Neither:
      return "neither";
  }
  return "neither";
}

CurveVerdict scan_curve(const ScalarInvariants& si, const ModelParams& p, double s) {
  if (!existence_region(p, 1.0, 2.0 * s)) {
    throw DomainError("s = " + fmt(s) + " is not admissible for b = " + fmt(p.b));
  }
  const double d1 = d_value(p, 1.0, 2.0 * s);
  CurveVerdict cv;
  cv.s = s;
  cv.quad = snap(0.5 * (si.mass - 2.0 * d1), 0.5 * (si.mass + 2.0 * d1));
  cv.lin = snap(s * si.momentum, std::abs(s) * momentum_scale(si));
  cv.constant = snap(si.energy, energy_scale(si, p));

  // Wells: {mu > 0 : quad mu^2 + lin mu + constant < 0}.
  const auto roots = quadratic_roots(cv.quad, cv.lin, cv.constant);
  auto add = [&](double lo, double hi) {
    lo = std::max(lo, 0.0);
    if (hi > lo) cv.wells.push_back({lo, hi});
  };
  if (cv.quad > 0.0) {
    if (roots.size() == 2) add(roots[0], roots[1]);
  } else if (cv.quad == 0.0) {
    if (cv.lin > 0.0) {
      add(0.0, -cv.constant / cv.lin);
    } else if (cv.lin < 0.0) {
      add(-cv.constant / cv.lin, kInf);
    } else if (cv.constant < 0.0) {
      add(0.0, kInf);
    }
  } else {
    if (roots.size() == 2) {
      add(0.0, roots[0]);
      add(roots[1], kInf);
    } else {
      add(0.0, kInf);
    }
  }

  // Nehari along the curve: mass mu^2 + slope mu + offset.
  double slope = 0.0;
  double offset = 0.0;
  if (si.frame == Frame::Gauge) {
    slope = s * (2.0 * si.p_lin + si.l4);
    offset = si.grad_sq - 3.0 * p.gamma / 16.0 * si.l6;
  } else {
    slope = 2.0 * s * si.p_lin;
    offset = si.grad_sq - si.interaction - p.b * si.l6;
  }
  cv.nehari_roots = quadratic_roots(si.mass, slope, offset);

  bool plus = false;
  bool minus = false;
  cv.plus_witness_mu = std::numeric_limits<double>::quiet_NaN();
  cv.minus_witness_mu = std::numeric_limits<double>::quiet_NaN();
  for (const auto& w : cv.wells) {
    if (cv.nehari_roots.size() < 2) {
      if (!plus) cv.plus_witness_mu = interior(w.lo, w.hi);
      plus = true;
      continue;
    }
    const double k1 = cv.nehari_roots[0];
    const double k2 = cv.nehari_roots[1];
    const double lo = std::max(w.lo, k1);
    const double hi = std::min(w.hi, k2);
    if (lo < hi) {
      if (!minus) cv.minus_witness_mu = interior(lo, hi);
      minus = true;
    }
    if (w.lo < k1) {
      if (!plus) cv.plus_witness_mu = interior(w.lo, std::min(w.hi, k1));
      plus = true;
    } else if (w.hi > k2) {
      if (!plus) cv.plus_witness_mu = interior(std::max(w.lo, k2), w.hi);
      plus = true;
    }
  }
  cv.verdict = plus ? (minus ? Verdict::Both : Verdict::APlus)
                    : (minus ? Verdict::AMinus : Verdict::Neither);
  return cv;
}

std::optional<double> nehari_normalize(const ScalarInvariants& si, const ModelParams& p,
                                       double omega, double c) {
  const ActionPowers pw = action_powers(si.sums(), p, omega, c, si.frame);
  // K(lambda f) = lambda (2 q2 + 4 q4 y + 6 q6 y^2), y = lambda^2.
  const auto roots = quadratic_roots(6.0 * pw.sextic, 4.0 * pw.quartic, 2.0 * pw.quadratic);
  for (double y : roots) {
    if (y > 0.0) {
      double lambda = std::sqrt(y);
      // One Newton step on K(lambda) tightens the residual.
      const double deriv = 2.0 * pw.quadratic + 12.0 * pw.quartic * y + 30.0 * pw.sextic * y * y;
      if (deriv != 0.0) lambda -= pw.nehari(lambda) / deriv;
      return lambda;
    }
  }
  return std::nullopt;
}

std::optional<double> find_plus_oscillation(const ScalarInvariants& si, const ModelParams& p,
                                            double cap) {
  if (!existence_region(p, 1.0, 2.0)) return std::nullopt;
  for (double mu = 1.0; mu <= cap; mu *= 2.0) {
    if (has_plus(scan_curve(modulate(si, p, mu), p, 1.0).verdict)) return mu;
  }
  return std::nullopt;
}

std::optional<MinusOscillation> find_minus_oscillation(const ScalarInvariants& si,
                                                       const ModelParams& p, double cap) {
  for (double mu = 1.0; mu <= cap; mu *= 2.0) {
    for (double eps = 0.5; eps >= 1.0 / 1048576.0; eps *= 0.5) {
      const double s = -(1.0 - eps);
      if (!existence_region(p, 1.0, 2.0 * s)) continue;
      if (has_minus(scan_curve(modulate(si, p, s * mu), p, s).verdict)) {
        return MinusOscillation{eps, mu};
      }
    }
  }
  return std::nullopt;
}

std::vector<double> make_s_grid(double lo, double hi, int n) {
  if (n < 1 || !(hi > lo)) throw DomainError("s grid needs n >= 1 and hi > lo");
  std::vector<double> out;
  for (int i = 1; i <= n; ++i) out.push_back(lo + (hi - lo) * i / n);
  return out;
}

ClassificationResult classify_invariants(const ScalarInvariants& si, const ModelParams& p,
                                         const std::vector<double>& s_grid) {
  constexpr double kCritical = -3.0 / 16.0;
  if (p.b < kCritical && std::abs(p.b - kCritical) > 1e-15) {
    throw DomainError("classification needs b >= -3/16, got b = " + fmt(p.b));
  }
  if (si.frame == Frame::Dnls && p.b < 0.0) {
    throw DomainError("DNLS-frame classification is available for b >= 0 only");
  }
  if (!(si.mass > 0.0)) throw DomainError("classification needs a nonzero field");

  ClassificationResult r;
  r.frame = si.frame;
  r.b = p.b;
  r.invariants = si;

  std::set<double> s_values;
  for (double s : s_grid) {
    if (existence_region(p, 1.0, 2.0 * s)) {
      s_values.insert(s);
    } else {
      r.notes.push_back("skipped inadmissible s = " + fmt(s));
    }
  }

  const bool critical = std::abs(p.b - kCritical) <= 1e-15;
  if (critical) {
    // Every field lies in some A_plus_s with s < 0: push s0 toward 0 until the
    // soliton action exceeds half the mass.
    for (int k = 1; k <= 1000; ++k) {
      const double s0 = -std::ldexp(1.0, -k);
      if (2.0 * d_value(p, 1.0, 2.0 * s0) > si.mass) {
        r.critical_s0 = s0;
        s_values.insert(s0);
        break;
      }
    }
    r.cases.push_back("critical");
    if (!r.critical_s0) {
      r.consistent = false;
      r.notes.push_back("no s0 with 2 d(1,2 s0) > mass found");
    }
  }

  const int e_sign = dead_band_sign(si.energy, energy_scale(si, p));
  const int p_sign = dead_band_sign(si.momentum, momentum_scale(si));
  bool at_threshold = false;
  bool above_or_at = false;
  if (!critical) {
    const double mstar = mass_threshold(p.b);
    r.mass_threshold = mstar;
    if (p.b > 0.0) r.s_star = s_star(p.b);
    r.s_ref = p.b > 0.0 ? *r.s_star : 1.0;
    s_values.insert(r.s_ref);
    s_values.insert(1.0);
    at_threshold = std::abs(si.mass - mstar) <= kDeadBand * mstar;
    above_or_at = at_threshold || si.mass > mstar;

    if ((!above_or_at) || (at_threshold && p_sign < 0)) {
      r.cases.push_back("ii");
      r.global_existence = true;
    }
    if (e_sign < 0) r.cases.push_back("iv");
    if (e_sign >= 0 && above_or_at) r.cases.push_back("v");
    if (at_threshold && p.b >= 0.0) {
      if (e_sign == 0 && p_sign == 0) {
        r.cases.push_back("vi-a");
        r.boundary_soliton = true;
      }
      if ((e_sign < 0 && p_sign <= 0) || (e_sign <= 0 && p_sign < 0)) {
        r.consistent = false;
        r.notes.push_back("energy/momentum signs excluded at the threshold mass");
      }
    }
    if (at_threshold && p.b < 0.0) {
      r.cases.push_back("vi-b");
      if (e_sign <= 0 && p_sign <= 0) {
        r.consistent = false;
        r.notes.push_back("energy <= 0 and momentum <= 0 excluded at the threshold mass");
      }
    }
  }

  for (double s : s_values) r.curve.push_back(scan_curve(si, p, s));

  // Compare the curve verdicts with the case predictions.
  auto fail = [&](const std::string& why) {
    r.consistent = false;
    r.notes.push_back(why);
  };
  for (const auto& cv : r.curve) {
    const std::string at = " at s = " + fmt(cv.s);
    if (!critical) {
      if (above_or_at && cv.verdict == Verdict::Both) fail("A_plus and A_minus overlap" + at);
      if (r.global_existence && cv.s == r.s_ref && !has_plus(cv.verdict)) {
        fail("expected A_plus" + at);
      }
      if (e_sign < 0 && !has_minus(cv.verdict)) fail("expected A_minus" + at);
      if (e_sign < 0 && above_or_at && has_plus(cv.verdict)) fail("unexpected A_plus" + at);
      if (e_sign >= 0 && above_or_at) {
        const bool excluded = (p_sign >= 0 && cv.s >= 0.0) || (p_sign <= 0 && cv.s <= 0.0);
        if (excluded && cv.verdict != Verdict::Neither) fail("expected no well" + at);
      }
    } else if (r.critical_s0 && cv.s == *r.critical_s0 && !has_plus(cv.verdict)) {
      fail("expected A_plus" + at);
    }
  }

  // Witness point for the gradient bound: prefer the reference curve.
  const CurveVerdict* chosen = nullptr;
  for (const auto& cv : r.curve) {
    if (!has_plus(cv.verdict)) continue;
    if (!chosen || cv.s == r.s_ref || (r.critical_s0 && cv.s == *r.critical_s0)) chosen = &cv;
  }
  if (chosen) {
    const double mu = chosen->plus_witness_mu;
    const double omega = mu * mu;
    const double c = 2.0 * chosen->s * mu;
    const ActionPowers pw = action_powers(si.sums(), p, omega, c, si.frame);
    r.witness_omega = omega;
    r.witness_c = c;
    r.gradient_bound = 8.0 * pw.action() + 0.5 * c * c * si.mass;
  }

  r.plus_oscillation_mu = find_plus_oscillation(si, p);
  r.minus_oscillation = find_minus_oscillation(si, p);
  return r;
}

ClassificationResult classify_field(const Field& f, const ModelParams& p, Frame frame,
                                    const std::vector<double>& s_grid) {
  return classify_invariants(invariant_summary(f, p, frame), p, s_grid);
}

}  // namespace dnls
