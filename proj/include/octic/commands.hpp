#ifndef OCTIC_COMMANDS_HPP
#define OCTIC_COMMANDS_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "octic/ansatz.hpp"
#include "octic/format.hpp"
#include "octic/normalize.hpp"
#include "octic/report_json.hpp"
#include "octic/run_config.hpp"
#include "octic/verify.hpp"

namespace octic {

/// Exit codes: 0 success, 1 verification/solvability failure, 2 usage or
/// config error (the CLI maps config_error/domain_error to 2 before these
/// run).
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline CommandResult cmd_solve(const RunConfig& cfg) {
  ExactSolution sol = solve_constraints(cfg.c, cfg.d, cfg.e, cfg.eta);
  nlohmann::json j = solution_to_json(sol);
  j["channel"] = nlohmann::json{{"N", cfg.dimension}, {"ell", cfg.ell}, {"eta", cfg.eta}};
  int exit_code = 0;
  if (cfg.input_a || cfg.input_b) {
    OcticPotential full = sol.potential;
    if (cfg.input_a) full.a = *cfg.input_a;
    if (cfg.input_b) full.b = *cfg.input_b;
    const SolvabilityCheck check = check_solvability(full, cfg.eta, cfg.solvability_rel_tol);
    j["input_check"] = nlohmann::json{{"solvable", check.solvable},
                                      {"a_mismatch", check.a_mismatch},
                                      {"b_mismatch", check.b_mismatch},
                                      {"rel_tol", cfg.solvability_rel_tol}};
    if (!check.solvable) exit_code = 1;
  }
  return {exit_code, j.dump(2) + "\n"};
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
  const ExactSolution sol = solve_constraints(cfg.c, cfg.d, cfg.e, cfg.eta);
  const VerificationReport report = verify_solution(sol, cfg.policy);
  return {report.overall_pass ? 0 : 1, report_to_json(report).dump(2) + "\n"};
}

namespace detail {

inline std::string csv_sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace detail

/// One CSV row per (m, c, d, e) grid point; failed rows fill the error
/// column and the scan continues.  Scan channels are two-dimensional
/// (eta = m); rows are emitted in input order.
inline CommandResult cmd_scan(const RunConfig& cfg, bool verify_rows) {
  ScanSpec spec = cfg.scan.value_or(ScanSpec{});
  int m_lo = 0, m_hi = 0;
  if (spec.m_max) {
    m_hi = *spec.m_max;
  } else {
    if (cfg.dimension != 2)
      throw config_error("scan without m_max requires an m channel (N = 2)");
    m_lo = m_hi = cfg.ell;
  }
  if (spec.c_values.empty()) spec.c_values = {cfg.c};
  if (spec.d_values.empty()) spec.d_values = {cfg.d};
  if (spec.e_values.empty()) spec.e_values = {cfg.e};

  std::ostringstream csv;
  csv << "m,c,d,e,eta,kappa,alpha,beta,tau,induced_a,induced_b,E";
  if (verify_rows) csv << ",verified";
  csv << ",error\n";

  for (int m = m_lo; m <= m_hi; ++m) {
    for (double c : spec.c_values) {
      for (double d : spec.d_values) {
        for (double e : spec.e_values) {
          csv << m << ',' << format_float17(c) << ',' << format_float17(d) << ','
              << format_float17(e) << ',';
          try {
            const ExactSolution sol = solve_constraints(c, d, e, static_cast<double>(m));
            csv << format_float17(sol.eta) << ',' << format_float17(sol.params.kappa) << ','
                << format_float17(sol.params.alpha) << ',' << format_float17(sol.params.beta)
                << ',' << format_float17(sol.params.tau) << ','
                << format_float17(sol.induced_a) << ',' << format_float17(sol.induced_b)
                << ',' << format_float17(sol.energy);
            if (verify_rows) {
              const VerificationReport report = verify_solution(sol, cfg.policy);
              csv << ',' << (report.overall_pass ? "true" : "false");
            }
            csv << ",\n";
          } catch (const std::exception& err) {
            csv << ",,,,,,,";
            if (verify_rows) csv << ',';
            csv << ',' << detail::csv_sanitize(err.what()) << '\n';
          }
        }
      }
    }
  }
  return {0, csv.str()};
}

/// CSV of (r, unnormalized R, N0 R, effective potential) on a uniform grid,
/// endpoints inclusive.
inline CommandResult cmd_plot(const RunConfig& cfg) {
  const ExactSolution sol = solve_constraints(cfg.c, cfg.d, cfg.e, cfg.eta);
  if (!(cfg.plot_r_min > 0.0)) throw config_error("plot_r_min must be > 0");
  if (!(cfg.plot_r_max > cfg.plot_r_min))
    throw config_error("plot_r_max must exceed plot_r_min");

  NormalizeOptions nopt;
  nopt.rel_tol = cfg.policy.quadrature_rel_tol;
  const NormalizationResult norm = normalize(sol, nopt);
  const RadialWavefunction R = build_wavefunction(sol);

  std::ostringstream csv;
  csv << "r,R_unnormalized,R_normalized,V_effective\n";
  const double h = (cfg.plot_r_max - cfg.plot_r_min) / (cfg.plot_points - 1);
  for (int i = 0; i < cfg.plot_points; ++i) {
    const double r = cfg.plot_r_min + i * h;
    const double value = R(r);
    csv << format_float17(r) << ',' << format_float17(value) << ','
        << format_float17(norm.n0 * value) << ','
        << format_float17(effective_potential(sol.potential, cfg.eta, r)) << '\n';
  }
  return {0, csv.str()};
}

}  // namespace octic

#endif  // OCTIC_COMMANDS_HPP
