// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dnls/classifier.hpp"
#include "dnls/closedform.hpp"
#include "dnls/evolve.hpp"
#include "dnls/functionals.hpp"
#include "dnls/oracle.hpp"
#include "dnls/profile_fit.hpp"
#include "dnls/random_field.hpp"
#include "dnls/solitons.hpp"
#include "dnls/verify.hpp"

using namespace dnls;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned long long kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (first_failure_.empty()) first_failure_ = what;
  }
  void note(const std::string& what) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome() const {
    Outcome o{pass_, notes_};
    if (!pass_) o.detail = "first failure: " + first_failure_ + (notes_.empty() ? "" : "; " + notes_);
    return o;
  }

 private:
  bool pass_ = true;
  std::string first_failure_;
  std::string notes_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool has_plus(Verdict v) { return v == Verdict::APlus || v == Verdict::Both; }
bool has_minus(Verdict v) { return v == Verdict::AMinus || v == Verdict::Both; }

double wrapped(double angle) { return std::remainder(angle, 2.0 * kPi); }

Outcome closed_form_constants() {
  Log log;
  const ModelParams b0 = ModelParams::from_b(0.0);
  struct Case {
    const char* name;
    double got;
    double want;
  };
  const Case cases[] = {
      {"M*(0)", mass_threshold(0.0), 4.0 * kPi},
      {"M*(-3/32)", mass_threshold(-3.0 / 32.0), 8.0 * std::sqrt(2.0) * kPi},
      {"M(0,1,2)", soliton_mass(b0, 1.0, 2.0), 4.0 * kPi},
      {"M(0,1,0)", soliton_mass(b0, 1.0, 0.0), 2.0 * kPi},
      {"P(0,1,0)", soliton_momentum(b0, 1.0, 0.0), 4.0},
      {"I1(1)", cosh_integral(1.0, 1), 2.0},
      {"I2(1)", cosh_integral(1.0, 2), 2.0 / 3.0},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double e = rel(c.got, c.want);
    worst = std::max(worst, e);
    log.expect(e <= 1e-12, std::string(c.name) + " off by " + num(e));
  }
  log.note("worst rel " + num(worst));
  return log.outcome();
}

Outcome quadrature_equivalence() {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* suite : {"mass", "momentum"}) {
    const auto r = verify::run_suite(suite, kSeed);
    for (const auto& c : r.checks) log.expect(c.pass, c.name + " error " + num(c.error));
    log.note(std::string(suite) + " worst " + num(r.worst_error()) + " over " +
             std::to_string(r.checks.size()) + " cases");
  }
  const double elapsed = seconds_since(t0);
  log.expect(elapsed < 30.0, "runtime " + num(elapsed) + " s");
  log.note(num(elapsed) + " s");
  return log.outcome();
}

// Energy of the gauge-frame soliton by quadrature of its density, using
// (Phi^2)' = -Phi^4 R sinh(kappa x) / (2 kappa).
double quadrature_energy(const SolitonParams& sp) {
  const double kappa = std::sqrt(sp.kappa_sq());
  const double radius = sp.radius();
  auto density = [&](double x) {
    const double q = phi_sq(sp, x);
    if (q == 0.0 || kappa * x > 600.0) return 0.0;
    const double sh = std::sinh(kappa * x);
    const double grad = q * q * q * radius * radius * sh * sh / (16.0 * kappa * kappa);
    return 0.5 * (grad + 0.25 * sp.c * sp.c * q) - sp.model.gamma / 32.0 * q * q * q;
  };
  return 2.0 * oracle::adaptive_quad(density, 0.0, INFINITY, 1e-12);
}

Outcome pohozaev() {
  Log log;
  std::mt19937_64 rng(kSeed);
  double worst_closed = 0.0;
  double worst_sampled = 0.0;
  for (double b : {0.1, -3.0 / 16.0, -3.0 / 8.0}) {
    const ModelParams p = ModelParams::from_b(b);
    for (const auto& [omega, c] : admissible_samples(p, 10, rng)) {
      const SolitonParams sp = make_soliton(p, omega, c);
      const double P = soliton_momentum(p, omega, c);
      const double E = quadrature_energy(sp);
      const double e1 = std::abs(E + 0.25 * c * P) / (std::abs(E) + std::abs(P) + 1e-30);
      worst_closed = std::max(worst_closed, e1);

      const double kappa = std::sqrt(sp.kappa_sq());
      const Grid g = make_grid(30.0 / kappa, 2048);
      const FunctionalReport r = report(sample_varphi(sp, g), p, omega, c, Frame::Gauge);
      const double e2 =
          std::abs(r.energy + 0.25 * c * r.momentum) / (std::abs(r.energy) + std::abs(r.momentum) + 1e-30);
      worst_sampled = std::max(worst_sampled, e2);
      const std::string at = " at b=" + num(b) + " omega=" + num(omega) + " c=" + num(c);
      log.expect(e1 < 1e-8, "closed form " + num(e1) + at);
      log.expect(e2 < 1e-5, "sampled " + num(e2) + at);
    }
  }
  log.note("closed " + num(worst_closed) + ", sampled " + num(worst_sampled));
  return log.outcome();
}

Outcome monotonicity() {
  Log log;
  double worst_slope = 0.0;
  for (double b : {3.0 / 16.0, 0.1, 0.0, -0.1, -3.0 / 32.0}) {
    const ModelParams p = ModelParams::from_b(b);
    std::vector<double> s;
    for (int i = 1; i < 400; ++i) s.push_back(-1.0 + i / 200.0);
    double prev = -INFINITY;
    for (double si : s) {
      const double m = soliton_mass(p, 1.0, 2.0 * si);
      log.expect(m > prev, "mass not increasing at b=" + num(b) + " s=" + num(si));
      prev = m;
    }
    const DScan scan = d_monotonicity_scan(b, s);
    log.expect(scan.shape_ok, "d pattern at b=" + num(b));
    log.expect(scan.max_slope_error < 1e-4, "d' vs P at b=" + num(b) + ": " + num(scan.max_slope_error));
    worst_slope = std::max(worst_slope, scan.max_slope_error);
  }
  double worst_p = 0.0;
  for (double b : {3.0 / 16.0, 0.1, 1e-2, 1e-3}) {
    const double s = s_star(b);
    worst_p = std::max(worst_p, std::abs(soliton_momentum(ModelParams::from_b(b), 1.0, 2.0 * s)));
  }
  log.expect(worst_p < 1e-10, "|P(s*)| = " + num(worst_p));
  log.expect(s_star(1e-3) > s_star(1e-1), "s*(1e-3) <= s*(1e-1)");
  log.note("max d' error " + num(worst_slope) + ", max |P(s*)| " + num(worst_p));
  return log.outcome();
}

Outcome ode_oracle() {
  Log log;
  const auto r = verify::run_suite("ode", kSeed);
  for (const auto& c : r.checks) log.expect(c.pass, c.name + " error " + num(c.error));
  log.note(std::to_string(r.checks.size()) + " profiles, worst " + num(r.worst_error()));
  return log.outcome();
}

Outcome conservation() {
  Log log;
  const Grid g = make_grid(40.0, 1024);
  double worst_drift = 0.0;
  double worst_standing = 0.0;
  double worst_speed = 0.0;
  double slowest = 0.0;
  for (double b : {0.0, 0.1, -0.1}) {
    const ModelParams p = ModelParams::from_b(b);
    EvolveConfig cfg;
    cfg.b = b;
    cfg.t_end = 1.0;
    cfg.record_every = 100;

    struct Run {
      std::string name;
      Field data;
      double omega;
      double c;
      bool soliton;
    };
    const std::vector<Run> runs = {
        {"standing", sample_phi(make_soliton(p, 1.0, 0.0), g), 1.0, 0.0, true},
        {"travelling", sample_phi(make_soliton(p, 1.0, 1.0), g), 1.0, 1.0, true},
        {"gaussian", gaussian(g, 1.0, 1.5, 0.0, 0.5), 0.0, 0.0, false},
    };
    for (const auto& run : runs) {
      const auto t0 = std::chrono::steady_clock::now();
      const Trajectory tr = evolve(run.data, cfg);
      const double elapsed = seconds_since(t0);
      slowest = std::max(slowest, elapsed);
      const std::string at = run.name + " b=" + num(b);
      log.expect(tr.status == EvolveStatus::Completed, at + " " + tr.message);
      if (tr.status != EvolveStatus::Completed) continue;
      worst_drift = std::max(worst_drift, tr.max_drift);
      log.expect(tr.max_drift < 1e-6, at + " drift " + num(tr.max_drift));
      log.expect(elapsed < 120.0, at + " runtime " + num(elapsed) + " s");
      const Field& last = tr.snapshots.back().field;
      if (run.soliton && run.c == 0.0) {
        const double err = l2_distance(last, run.data.scaled(std::polar(1.0, run.omega)));
        worst_standing = std::max(worst_standing, err);
        log.expect(err < 1e-5, at + " standing-wave error " + num(err));
      }
      if (run.soliton && run.c != 0.0) {
        const double err = std::abs(modulus_shift(run.data, last) - run.c);
        worst_speed = std::max(worst_speed, err);
        log.expect(err < 2.0 * g.dx, at + " speed error " + num(err));
      }
    }
  }
  log.note("drift " + num(worst_drift) + ", standing " + num(worst_standing) + ", speed " +
           num(worst_speed) + " (dx " + num(g.dx) + "), slowest " + num(slowest) + " s");
  return log.outcome();
}

Outcome gauge_consistency_check() {
  Log log;
  const Grid g = make_grid(40.0, 1024);
  std::mt19937_64 rng(kSeed);
  struct Data {
    std::string name;
    double b;
    Field f;
  };
  const std::vector<Data> data = {
      {"soliton", 0.0, sample_phi(make_soliton(ModelParams::from_b(0.0), 1.0, 1.0), g)},
      {"gaussian", 0.1, gaussian(g, 1.2, 1.3, 1.0, -0.4)},
      {"random", -0.1, random_smooth_field(g, rng)},
  };
  double worst = 0.0;
  for (const auto& d : data) {
    const double err = gauge_consistency(d.f, d.b, 0.5);
    worst = std::max(worst, err);
    log.expect(err < 1e-5, d.name + " " + num(err));
  }
  log.note("worst L2 " + num(worst));
  return log.outcome();
}

Outcome flow_invariance() {
  Log log;
  const ModelParams p = ModelParams::from_b(0.0);
  const Grid g = make_grid(32.0, 512);
  struct Data {
    Field f;
    Monitor m;
    int expected_sign;
  };
  std::vector<Data> data;
  for (double lambda : {0.5, 0.7, 0.9}) {
    for (double c : {0.0, 1.0, -1.0}) {
      data.push_back({sample_varphi(make_soliton(p, 1.0, c), g).scaled(lambda), {1.0, c}, 1});
    }
  }
  data.push_back({gaussian(g, 0.8, 1.5, 0.0, 0.3), {1.0, 0.5}, 1});
  for (double lambda : {1.1, 1.2, 1.3}) {
    data.push_back({sample_varphi(make_soliton(p, 1.0, 0.0), g).scaled(lambda), {1.0, 0.0}, -1});
  }
  for (double lambda : {1.1, 1.2}) {
    data.push_back({sample_varphi(make_soliton(p, 1.0, 1.0), g).scaled(lambda), {1.0, 1.0}, -1});
  }

  int plus = 0;
  int minus = 0;
  double worst_margin = INFINITY;
  EvolveConfig cfg;
  cfg.b = 0.0;
  cfg.gauge_a = 0.25;
  cfg.t_end = 1.0;
  cfg.record_every = 10;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& d = data[i];
    const std::string at = "data " + std::to_string(i);
    const Membership m0 = member(invariant_summary(d.f, p, Frame::Gauge), p, d.m.omega, d.m.c);
    const bool certified = m0.in_well && m0.k_sign == d.expected_sign;
    log.expect(certified, at + " not certified");
    if (!certified) continue;
    (d.expected_sign > 0 ? plus : minus) += 1;
    const Trajectory tr = evolve(d.f, cfg, d.m);
    log.expect(tr.status == EvolveStatus::Completed, at + " " + tr.message);
    for (const auto& [t, sign] : tr.k_sign) {
      log.expect(sign == d.expected_sign, at + " Nehari sign " + std::to_string(sign) + " at t=" + num(t));
    }
    if (d.expected_sign > 0) {
      const double margin = (*tr.gradient_bound - tr.max_grad_sq) / *tr.gradient_bound;
      worst_margin = std::min(worst_margin, margin);
      log.expect(margin >= -1e-4, at + " gradient bound margin " + num(margin));
    }
  }
  log.expect(plus == 10 && minus == 5, "certified " + std::to_string(plus) + "/" + std::to_string(minus));
  log.note(std::to_string(plus) + " A+ and " + std::to_string(minus) +
           " A- runs, min bound margin " + num(worst_margin));
  return log.outcome();
}

const CurveVerdict* at_s(const ClassificationResult& r, double s) {
  for (const auto& cv : r.curve) {
    if (cv.s == s) return &cv;
  }
  return nullptr;
}

bool has_case(const ClassificationResult& r, const std::string& name) {
  return std::find(r.cases.begin(), r.cases.end(), name) != r.cases.end();
}

Outcome classifier_suite() {
  Log log;
  const Grid g = make_grid(24.0, 512);
  const std::vector<double> s_grid = make_s_grid(-1.0, 1.0, 20);
  const ModelParams b0 = ModelParams::from_b(0.0);
  const ModelParams bp = ModelParams::from_b(0.1);
  const ModelParams bm = ModelParams::from_b(-0.1);
  auto classify = [&](const Field& f, const ModelParams& p) {
    return classify_field(f, p, Frame::Gauge, s_grid);
  };
  auto check_consistent = [&](const ClassificationResult& r, const std::string& tag) {
    log.expect(r.consistent, tag + ": " + (r.notes.empty() ? "inconsistent" : r.notes.front()));
  };

  // (ii) small mass, both below the reference s and at s* for b > 0.
  for (const ModelParams* p : {&b0, &bp, &bm}) {
    const auto r = classify(sample_varphi(make_soliton(*p, 1.0, 0.5), g).scaled(0.6), *p);
    const CurveVerdict* cv = at_s(r, r.s_ref);
    log.expect(has_case(r, "ii") && r.global_existence, "(ii) not reported at b=" + num(p->b));
    log.expect(cv && has_plus(cv->verdict), "(ii) no A+ at s_ref, b=" + num(p->b));
    log.expect(r.gradient_bound.has_value(), "(ii) no gradient bound");
    check_consistent(r, "(ii)");
  }

  // (iii) oscillating factors reach A+_1 and A-_{-(1-eps)}.
  {
    const Field psi = gaussian(g, 2.0, 1.0, 0.5, -0.7);
    const ScalarInvariants si = invariant_summary(psi, b0, Frame::Gauge);
    const auto mu0 = find_plus_oscillation(si, b0);
    log.expect(mu0.has_value(), "(iii-a) no mu0 below cap");
    if (mu0) {
      for (double k : {1.0, 2.0, 8.0}) {
        const CurveVerdict cv = scan_curve(modulate(si, b0, k * *mu0), b0, 1.0);
        log.expect(has_plus(cv.verdict), "(iii-a) lost A+ at " + num(k) + " mu0");
      }
    }
    const auto mo = find_minus_oscillation(si, b0);
    log.expect(mo.has_value(), "(iii-b) no (eps, mu) below cap");
    if (mo) {
      const double s = -(1.0 - mo->epsilon);
      const CurveVerdict cv = scan_curve(modulate(si, b0, s * mo->mu), b0, s);
      log.expect(has_minus(cv.verdict), "(iii-b) not in A-");
    }
  }

  // (iv) negative energy: A- everywhere, no A+ when the mass is at least M*.
  {
    const Field low = sample_varphi(make_soliton(b0, 1.0, 1.0), g).scaled(1.05);
    const auto r = classify(low, b0);
    log.expect(r.invariants.energy < 0.0 && has_case(r, "iv"), "(iv) below M* not reported");
    for (const auto& cv : r.curve) log.expect(has_minus(cv.verdict), "(iv) no A- at s=" + num(cv.s));
    check_consistent(r, "(iv) below M*");

    const Field high = sample_varphi(make_soliton(b0, 1.0, 1.9), g).scaled(1.15);
    const auto h = classify(high, b0);
    log.expect(h.invariants.energy < 0.0 && h.invariants.mass > *h.mass_threshold,
               "(iv) witness above M* has E=" + num(h.invariants.energy) + " M=" + num(h.invariants.mass));
    for (const auto& cv : h.curve) {
      log.expect(cv.verdict == Verdict::AMinus, "(iv) verdict " + std::string(verdict_name(cv.verdict)) +
                                                    " at s=" + num(cv.s));
    }
    check_consistent(h, "(iv) above M*");
  }

  // (v) nonnegative energy above M*: no well on the half of the curve fixed by sign(P).
  for (double kick : {-1.0, 1.0}) {
    const Field f = with_mass(gaussian(g, 1.0, 5.0, 0.0, kick), 1.2 * mass_threshold(0.0));
    const auto r = classify(f, b0);
    const bool p_pos = r.invariants.momentum >= 0.0;
    log.expect(r.invariants.energy >= 0.0 && has_case(r, "v"), "(v) not reported for kick " + num(kick));
    log.expect(p_pos == (kick < 0.0), "(v) momentum sign for kick " + num(kick));
    for (const auto& cv : r.curve) {
      if ((p_pos && cv.s >= 0.0) || (!p_pos && cv.s <= 0.0)) {
        log.expect(cv.verdict == Verdict::Neither, "(v) well at s=" + num(cv.s));
      }
    }
    check_consistent(r, "(v)");
  }

  // (vi-a) the soliton at s* has M = M*, E = P = 0.
  {
    const SolitonParams sp = make_soliton(bp, 1.0, 2.0 * s_star(bp.b));
    const Grid wide = make_grid(30.0 / std::sqrt(sp.kappa_sq()), 1024);
    const auto r = classify(sample_varphi(sp, wide), bp);
    log.expect(has_case(r, "vi-a") && r.boundary_soliton, "(vi-a) sampled soliton at s* not detected");
    check_consistent(r, "(vi-a) b>0");

    // Exact invariants of the b = 0 algebraic soliton.
    kernels::Sums s;
    s.mass = 4.0 * kPi;
    s.grad_sq = 6.0 * kPi;
    s.p_lin = -4.0 * kPi;
    s.interaction = -16.0 * kPi;
    s.l4 = 16.0 * kPi;
    s.l6 = 96.0 * kPi;
    const auto a = classify_invariants(invariants_from_sums(s, b0, Frame::Gauge), b0, s_grid);
    log.expect(has_case(a, "vi-a") && a.boundary_soliton, "(vi-a) algebraic soliton not detected");
    check_consistent(a, "(vi-a) b=0");
  }

  // (vi-b) at M = M* with b < 0, E <= 0 and P <= 0 never occur together.
  {
    std::mt19937_64 rng(kSeed + 6);
    RandomFieldOptions opt;
    opt.max_kick = 3.0;
    int reported = 0;
    for (int i = 0; i < 50; ++i) {
      const Field f = with_mass(random_smooth_field(g, rng, opt), mass_threshold(bm.b));
      const auto r = classify_invariants(invariant_summary(f, bm, Frame::Gauge), bm, {});
      reported += has_case(r, "vi-b");
      log.expect(!(r.invariants.energy <= 0.0 && r.invariants.momentum <= 0.0),
                 "(vi-b) E<=0 and P<=0 at M*");
      check_consistent(r, "(vi-b)");
    }
    log.expect(reported == 50, "(vi-b) reported " + std::to_string(reported) + "/50");
  }

  // (i) disjointness at mass >= M*.
  int overlaps = 0;
  {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> factor(1.0, 2.0);
    const Grid small = make_grid(16.0, 256);
    const std::vector<double> s_values = make_s_grid(-1.0, 1.0, 40);
    for (const ModelParams* p : {&b0, &bp}) {
      const double mstar = mass_threshold(p->b);
      for (int i = 0; i < 1000; ++i) {
        const Field f = with_mass(random_smooth_field(small, rng), mstar * factor(rng));
        const ScalarInvariants si = invariant_summary(f, *p, Frame::Gauge);
        for (double s : s_values) overlaps += scan_curve(si, *p, s).verdict == Verdict::Both;
        if (p->b > 0.0) overlaps += scan_curve(si, *p, s_star(p->b)).verdict == Verdict::Both;
      }
    }
    log.expect(overlaps == 0, "(i) " + std::to_string(overlaps) + " overlaps");
  }

  // b = -3/16: every field lies in A+ at some s0 < 0.
  int critical_hits = 0;
  {
    const ModelParams pc = ModelParams::from_b(-3.0 / 16.0);
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_real_distribution<double> mass(0.5, 60.0);
    const Grid small = make_grid(16.0, 256);
    for (int i = 0; i < 100; ++i) {
      const Field f = with_mass(random_smooth_field(small, rng), mass(rng));
      const auto r = classify_invariants(invariant_summary(f, pc, Frame::Gauge), pc, {});
      const CurveVerdict* cv = r.critical_s0 ? at_s(r, *r.critical_s0) : nullptr;
      const bool ok = cv && *r.critical_s0 < 0.0 && has_plus(cv->verdict) && r.consistent;
      critical_hits += ok;
    }
    log.expect(critical_hits == 100, "critical route " + std::to_string(critical_hits) + "/100");
  }
  log.note("overlaps " + std::to_string(overlaps) + ", critical route " + std::to_string(critical_hits) + "/100");
  return log.outcome();
}

Outcome nehari_minimality() {
  Log log;
  const ModelParams p = ModelParams::from_b(0.0);
  const Grid g = make_grid(16.0, 256);
  std::mt19937_64 rng(kSeed + 3);
  double worst = INFINITY;
  int no_root = 0;
  for (const auto& [omega, c] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}}) {
    const double d = d_value(p, omega, c);
    for (int i = 0; i < 100; ++i) {
      const Field f = random_smooth_field(g, rng);
      const ScalarInvariants si = invariant_summary(f, p, Frame::Gauge);
      const auto lambda0 = nehari_normalize(si, p, omega, c);
      if (!lambda0) {
        ++no_root;
        continue;
      }
      const double s = action_powers(si.sums(), p, omega, c, Frame::Gauge).action(*lambda0);
      worst = std::min(worst, s / d);
      log.expect(s >= d * (1.0 - 1e-3), "S/d = " + num(s / d) + " at c=" + num(c));
    }
  }
  log.expect(no_root == 0, std::to_string(no_root) + " fields without a Nehari root");
  log.note("min S/d " + num(worst));
  return log.outcome();
}

Outcome profile_fit_check() {
  Log log;
  const Grid g = make_grid(20.0, 8192);
  std::mt19937_64 rng(kSeed + 4);
  struct Truth {
    double theta, y, lambda;
  };
  const Truth truths[] = {{0.7, 3.2, 0.1}, {-1.2, -2.5, 0.15}, {2.0, 0.4, 0.08}};
  double worst_clean = 0.0;
  double worst_noisy = 0.0;
  double worst_residual = 0.0;
  for (const auto& t : truths) {
    const Field clean = rescaled_algebraic_profile(g, t.theta, t.y, t.lambda);
    const ProfileFit fit = profile_fit(clean);
    const double err = std::max(std::abs(wrapped(fit.theta - t.theta)), std::abs(fit.y - t.y));
    worst_clean = std::max(worst_clean, err);
    worst_residual = std::max(worst_residual, fit.residual);
    log.expect(err < 1e-3, "clean fit error " + num(err));
    log.expect(fit.residual < 1e-4, "clean residual " + num(fit.residual));

    RandomFieldOptions opt;
    opt.spread = 10.0;
    const Field noise = random_smooth_field(g, rng, opt);
    const Field noisy = clean + noise.scaled(0.01 * l2_norm(clean) / l2_norm(noise));
    const ProfileFit nf = profile_fit(noisy);
    const double nerr = std::max(std::abs(wrapped(nf.theta - t.theta)), std::abs(nf.y - t.y));
    worst_noisy = std::max(worst_noisy, nerr);
    log.expect(nerr < 5e-2, "perturbed fit error " + num(nerr));
  }
  log.note("clean " + num(worst_clean) + " (residual " + num(worst_residual) + "), perturbed " +
           num(worst_noisy));
  return log.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"closed-form constants", closed_form_constants},
      {"formula vs quadrature", quadrature_equivalence},
      {"Pohozaev identity", pohozaev},
      {"monotonicity", monotonicity},
      {"ODE shooting oracle", ode_oracle},
      {"evolution conservation", conservation},
      {"gauge consistency", gauge_consistency_check},
      {"flow invariance", flow_invariance},
      {"classifier cases", classifier_suite},
      {"Nehari minimality", nehari_minimality},
      {"profile fit", profile_fit_check},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s [%.1f s] %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
