#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dnls/classifier.hpp"
#include "dnls/closedform.hpp"
#include "dnls/error.hpp"
#include "dnls/evolve.hpp"
#include "dnls/functionals.hpp"
#include "dnls/gauge.hpp"
#include "dnls/io.hpp"
#include "dnls/profile_fit.hpp"
#include "dnls/solitons.hpp"
#include "dnls/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace dnls;

constexpr int kExitDomain = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 64;

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(); }

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

ordered_json to_json(const FunctionalReport& r) {
  ordered_json j;
  j["frame"] = frame_name(r.frame);
  j["omega"] = r.omega;
  j["c"] = r.c;
  j["energy"] = r.energy;
  j["mass"] = r.mass;
  j["momentum"] = r.momentum;
  j["action"] = r.action;
  j["nehari"] = r.nehari;
  j["ell"] = r.ell;
  j["ii"] = r.ii;
  j["grad_sq"] = r.grad_sq;
  j["l4"] = r.l4;
  j["l6"] = r.l6;
  return j;
}

ordered_json to_json(const ScalarInvariants& si) {
  ordered_json j;
  j["frame"] = frame_name(si.frame);
  j["grad_sq"] = si.grad_sq;
  j["mass"] = si.mass;
  j["p_lin"] = si.p_lin;
  j["l4"] = si.l4;
  j["l6"] = si.l6;
  j["energy"] = si.energy;
  j["momentum"] = si.momentum;
  return j;
}

ordered_json to_json(const CurveVerdict& cv) {
  ordered_json j;
  j["s"] = cv.s;
  j["verdict"] = verdict_name(cv.verdict);
  ordered_json wells = ordered_json::array();
  for (const auto& w : cv.wells) wells.push_back({number_or_null(w.lo), number_or_null(w.hi)});
  j["J"] = wells;
  j["nehari_negative_on"] =
      cv.nehari_roots.size() == 2 ? ordered_json{cv.nehari_roots[0], cv.nehari_roots[1]}
                                  : ordered_json::array();
  j["plus_witness_mu"] = number_or_null(cv.plus_witness_mu);
  j["minus_witness_mu"] = number_or_null(cv.minus_witness_mu);
  return j;
}

ordered_json to_json(const ClassificationResult& r) {
  ordered_json j;
  j["frame"] = frame_name(r.frame);
  j["b"] = r.b;
  j["invariants"] = to_json(r.invariants);
  j["M_star"] = r.mass_threshold ? ordered_json(*r.mass_threshold) : ordered_json();
  j["s_star"] = r.s_star ? ordered_json(*r.s_star) : ordered_json();
  j["s_ref"] = r.s_ref;
  j["cases"] = r.cases;
  j["boundary_soliton"] = r.boundary_soliton;
  j["global_existence"] = r.global_existence;
  ordered_json witness;
  if (r.witness_omega) {
    witness["omega"] = *r.witness_omega;
    witness["c"] = *r.witness_c;
    witness["gradient_bound"] = *r.gradient_bound;
  }
  j["witness"] = witness;
  j["critical_s0"] = r.critical_s0 ? ordered_json(*r.critical_s0) : ordered_json();
  j["plus_oscillation_mu0"] =
      r.plus_oscillation_mu ? ordered_json(*r.plus_oscillation_mu) : ordered_json("not found below cap");
  if (r.minus_oscillation) {
    j["minus_oscillation"] = {{"epsilon", r.minus_oscillation->epsilon},
                              {"mu", r.minus_oscillation->mu}};
  } else {
    j["minus_oscillation"] = "not found below cap";
  }
  ordered_json curve = ordered_json::array();
  for (const auto& cv : r.curve) curve.push_back(to_json(cv));
  j["curve"] = curve;
  j["consistent"] = r.consistent;
  j["notes"] = r.notes;
  return j;
}

std::vector<double> parse_s_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw DomainError("--s-grid expects a:b:n");
  try {
    return make_s_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]));
  } catch (const std::logic_error&) {
    throw DomainError("--s-grid expects numbers in a:b:n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solitons, conserved quantities and potential wells for the generalized DNLS equation"};
  app.require_subcommand(1);
  unsigned long long seed = 20240601;
  app.add_option("--seed", seed, "Seed for random test data");

  double b = 0.0, omega = 1.0, c = 0.0, half_length = 0.0, a = 0.25;
  long long points = 2048;
  std::string out_path, in_path, field_path, which = "phi", frame = "dnls", quantity = "mass",
                                                suite = "quad", s_grid = "-0.9:1:19";

  auto* soliton = app.add_subcommand("soliton", "Sample a soliton profile to a field file");
  soliton->add_option("--b", b, "Quintic coefficient")->required();
  soliton->add_option("--omega", omega, "Frequency")->required();
  soliton->add_option("--c", c, "Speed")->required();
  soliton->add_option("--L", half_length, "Half-length of the grid (default: tail-based)");
  soliton->add_option("--N", points, "Grid points");
  soliton->add_option("--which", which, "Profile: Phi, varphi or phi")
      ->check(CLI::IsMember({"Phi", "varphi", "phi"}));
  soliton->add_option("--out", out_path, "Output field file")->required();

  auto* report_cmd = app.add_subcommand("report", "Functionals of a field");
  report_cmd->add_option("--field", field_path, "Field file")->required();
  report_cmd->add_option("--b", b, "Quintic coefficient")->required();
  report_cmd->add_option("--omega", omega, "Frequency")->required();
  report_cmd->add_option("--c", c, "Speed")->required();
  report_cmd->add_option("--frame", frame, "dnls or gauge")->check(CLI::IsMember({"dnls", "gauge"}));

  auto* gauge_cmd = app.add_subcommand("gauge", "Apply a gauge transformation");
  gauge_cmd->add_option("--a", a, "Gauge parameter")->required();
  gauge_cmd->add_option("--in", in_path, "Input field file")->required();
  gauge_cmd->add_option("--out", out_path, "Output field file")->required();

  double s_from = -0.9, s_to = 0.9;
  int steps = 5;
  auto* scan = app.add_subcommand("scan", "Closed-form quantity along the scaling curve");
  scan->add_option("--b", b, "Quintic coefficient")->required();
  scan->add_option("--quantity", quantity, "mass, momentum, energy or d")
      ->check(CLI::IsMember({"mass", "momentum", "energy", "d"}));
  scan->add_option("--s-from", s_from, "First s");
  scan->add_option("--s-to", s_to, "Last s");
  scan->add_option("--steps", steps, "Number of rows")->check(CLI::PositiveNumber);

  auto* threshold = app.add_subcommand("threshold", "Mass threshold and zero-momentum speed");
  threshold->add_option("--b", b, "Quintic coefficient")->required();

  auto* classify = app.add_subcommand("classify", "Potential-well classification of a field");
  classify->add_option("--field", field_path, "Field file")->required();
  classify->add_option("--b", b, "Quintic coefficient")->required();
  classify->add_option("--s-grid", s_grid, "Curve parameters a:b:n");
  classify->add_option("--frame", frame, "dnls or gauge")->check(CLI::IsMember({"dnls", "gauge"}));

  EvolveConfig cfg;
  double monitor_omega = std::nan(""), monitor_c = std::nan("");
  bool fixed_step = false;
  auto* evolve_cmd = app.add_subcommand("evolve", "Time integration with drift tracking");
  evolve_cmd->add_option("--field", field_path, "Initial field file")->required();
  evolve_cmd->add_option("--b", cfg.b, "Quintic coefficient")->required();
  evolve_cmd->add_option("--a", cfg.gauge_a, "Gauge frame: 0 or 0.25")
      ->check(CLI::IsMember({0.0, 0.25}));
  evolve_cmd->add_option("--dt", cfg.dt, "Initial time step")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--t-end", cfg.t_end, "Final time")->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--record-every", cfg.record_every, "Steps between snapshots")
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--dealias", cfg.dealias, "Kept spectral fraction");
  evolve_cmd->add_flag("--backward", cfg.backward, "Integrate toward negative times");
  evolve_cmd->add_flag("--fixed-step", fixed_step, "Disable step-size control");
  evolve_cmd->add_option("--monitor-omega", monitor_omega, "Monitored frequency");
  evolve_cmd->add_option("--monitor-c", monitor_c, "Monitored speed");
  evolve_cmd->add_option("--out", out_path, "Output directory")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Oracle cross-checks");
  verify_cmd->add_option("--suite", suite, "quad, ode, mass, momentum or gauge")
      ->check(CLI::IsMember(dnls::verify::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const ModelParams params = ModelParams::from_b(b);
    if (soliton->parsed()) {
      const SolitonParams sp = make_soliton(params, omega, c);
      const double L = half_length > 0.0 ? half_length : suggested_half_length(sp);
      const Grid g = make_grid(L, points);
      const Field f = which == "Phi" ? sample_capital_phi(sp, g)
                      : which == "varphi" ? sample_varphi(sp, g)
                                          : sample_phi(sp, g);
      io::write_field(out_path, f);
    } else if (report_cmd->parsed()) {
      const Field f = io::read_field(field_path);
      print(to_json(report(f, params, omega, c, parse_frame(frame))));
    } else if (gauge_cmd->parsed()) {
      io::write_field(out_path, gauge_transform(io::read_field(in_path), a));
    } else if (scan->parsed()) {
      for (int i = 0; i < steps; ++i) {
        const double s = steps == 1 ? s_from : s_from + (s_to - s_from) * i / (steps - 1);
        const double cc = 2.0 * s;
        double value = 0.0;
        if (quantity == "mass") value = soliton_mass(params, 1.0, cc);
        if (quantity == "momentum") value = soliton_momentum(params, 1.0, cc);
        if (quantity == "energy") value = soliton_energy(params, 1.0, cc);
        if (quantity == "d") value = d_value(params, 1.0, cc);
        std::cout << io::csv_number(s) << ',' << io::csv_number(value) << '\n';
      }
    } else if (threshold->parsed()) {
      ordered_json j;
      if (b > 0.0) j["s_star"] = s_star(b);
      j["M_star"] = mass_threshold(b);
      std::cout << j.dump() << '\n';
    } else if (classify->parsed()) {
      const Field f = io::read_field(field_path);
      print(to_json(classify_field(f, params, parse_frame(frame), parse_s_grid(s_grid))));
    } else if (evolve_cmd->parsed()) {
      cfg.adaptive = !fixed_step;
      const Field f0 = io::read_field(field_path);
      std::optional<Monitor> monitor;
      if (std::isfinite(monitor_omega) || std::isfinite(monitor_c)) {
        if (!(std::isfinite(monitor_omega) && std::isfinite(monitor_c))) {
          throw DomainError("--monitor-omega and --monitor-c go together");
        }
        make_soliton(ModelParams::from_b(cfg.b), monitor_omega, monitor_c);
        monitor = Monitor{monitor_omega, monitor_c};
      }
      const Trajectory traj = evolve(f0, cfg, monitor);
      namespace fs = std::filesystem;
      fs::create_directories(out_path);
      std::ofstream drift(fs::path(out_path) / "drift.csv");
      drift << "t,dE/E,dM/M,dP/P\n";
      for (const auto& d : traj.drift) {
        drift << io::csv_number(d.t) << ',' << io::csv_number(d.energy) << ','
              << io::csv_number(d.mass) << ',' << io::csv_number(d.momentum) << '\n';
      }
      for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
        std::ostringstream name;
        name << "snapshot_" << std::setw(5) << std::setfill('0') << i << ".json";
        io::write_field((fs::path(out_path) / name.str()).string(), traj.snapshots[i].field);
      }
      ordered_json j;
      j["status"] = evolve_status_name(traj.status);
      j["message"] = traj.message;
      j["steps"] = traj.steps;
      j["min_dt"] = traj.dt_used;
      j["max_drift"] = traj.max_drift;
      j["snapshots"] = traj.snapshots.size();
      j["max_grad_sq"] = traj.max_grad_sq;
      if (traj.gradient_bound) j["gradient_bound"] = *traj.gradient_bound;
      if (!traj.k_sign.empty()) {
        ordered_json ks = ordered_json::array();
        for (const auto& [t, s] : traj.k_sign) ks.push_back({t, s});
        j["k_sign"] = ks;
      }
      if (traj.status != EvolveStatus::Completed) {
        if (!traj.snapshots.empty()) {
          try {
            const ProfileFit fit = profile_fit(traj.snapshots.back().field);
            j["profile_fit"] = {{"theta", fit.theta}, {"y", fit.y}, {"lambda", fit.lambda},
                                {"residual", fit.residual}};
          } catch (const DomainError&) {
          }
        }
        print(j);
        return kExitNumerical;
      }
      print(j);
    } else if (verify_cmd->parsed()) {
      const auto result = dnls::verify::run_suite(suite, seed);
      ordered_json j;
      j["suite"] = result.suite;
      j["pass"] = result.pass();
      j["worst_error"] = result.worst_error();
      ordered_json checks = ordered_json::array();
      for (const auto& ch : result.checks) {
        checks.push_back({{"name", ch.name}, {"error", ch.error}, {"tolerance", ch.tolerance},
                          {"pass", ch.pass}});
      }
      j["checks"] = checks;
      print(j);
      if (!result.pass()) return kExitNumerical;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
