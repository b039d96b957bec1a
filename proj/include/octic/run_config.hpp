#ifndef OCTIC_RUN_CONFIG_HPP
#define OCTIC_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octic/errors.hpp"
#include "octic/reduction.hpp"
#include "octic/verify.hpp"

namespace octic {

/// Thrown for malformed or invalid run configs; the CLI maps it to exit
/// code 2 with the field name in the message.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Cartesian scan directions for cmd_scan.  With m_max set, channels run
/// m = 0..m_max; otherwise the single channel from the config is used.
/// Empty coefficient lists fall back to the base potential values.
struct ScanSpec {
  std::optional<int> m_max;
  std::vector<double> c_values;
  std::vector<double> d_values;
  std::vector<double> e_values;
};

/// Parsed run configuration shared by all CLI commands.
struct RunConfig {
  std::string command;  // optional in the file; must match the subcommand
  double c = 0.0;
  double d = 0.0;
  double e = 1.0;
  std::optional<double> input_a;  // full-potential solvability check
  std::optional<double> input_b;
  int dimension = 2;
  int ell = 0;
  double eta = 0.0;
  VerifyPolicy policy;
  double solvability_rel_tol = 1e-9;
  double plot_r_min = 1e-3;
  double plot_r_max = 4.0;
  int plot_points = 2000;
  std::optional<ScanSpec> scan;
  std::string output_path;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::string& where,
                                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) {
        known = true;
        break;
      }
    if (!known) throw config_error("unknown key \"" + it.key() + "\" in " + where);
  }
}

inline double require_number(const nlohmann::json& obj, const std::string& where,
                             const char* key) {
  if (!obj.contains(key)) throw config_error(where + " is missing required key \"" + key + "\"");
  if (!obj[key].is_number()) throw config_error(where + "." + key + " must be a number");
  return obj[key].get<double>();
}

inline std::vector<double> number_list(const nlohmann::json& v, const std::string& where) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
    return out;
  }
  if (!v.is_array()) throw config_error(where + " must be a number or an array of numbers");
  for (const auto& x : v) {
    if (!x.is_number()) throw config_error(where + " must contain numbers only");
    out.push_back(x.get<double>());
  }
  return out;
}

inline void parse_overrides(const nlohmann::json& o, RunConfig& cfg) {
  reject_unknown_keys(o, "overrides",
                      {"coefficient_rel_tol", "residual_tol", "eigenvalue_tol", "shoot_tol",
                       "quadrature_rel_tol", "normalization_tol", "bisection_tol",
                       "grid_points", "r_max", "solvability_rel_tol", "plot_r_min",
                       "plot_r_max", "plot_points"});
  auto get = [&](const char* key, double& target) {
    if (o.contains(key)) {
      if (!o[key].is_number()) throw config_error(std::string("overrides.") + key +
                                                  " must be a number");
      target = o[key].get<double>();
    }
  };
  get("coefficient_rel_tol", cfg.policy.coefficient_rel_tol);
  get("residual_tol", cfg.policy.residual_tol);
  get("eigenvalue_tol", cfg.policy.eigenvalue_tol);
  get("shoot_tol", cfg.policy.shoot_tol);
  get("quadrature_rel_tol", cfg.policy.quadrature_rel_tol);
  get("normalization_tol", cfg.policy.normalization_tol);
  get("bisection_tol", cfg.policy.bisection_tol);
  get("r_max", cfg.policy.r_max);
  get("solvability_rel_tol", cfg.solvability_rel_tol);
  get("plot_r_min", cfg.plot_r_min);
  get("plot_r_max", cfg.plot_r_max);
  if (o.contains("grid_points")) {
    if (!o["grid_points"].is_number_integer())
      throw config_error("overrides.grid_points must be an integer");
    cfg.policy.grid_points = o["grid_points"].get<int>();
    if (cfg.policy.grid_points < 50) throw config_error("overrides.grid_points must be >= 50");
  }
  if (o.contains("plot_points")) {
    if (!o["plot_points"].is_number_integer())
      throw config_error("overrides.plot_points must be an integer");
    cfg.plot_points = o["plot_points"].get<int>();
    if (cfg.plot_points < 2) throw config_error("overrides.plot_points must be >= 2");
  }
}

}  // namespace detail

/// Parses and validates a run config.  Unknown keys are errors, not
/// warnings: a silently ignored tolerance name would weaken verification.
inline RunConfig parse_run_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw config_error(std::string("config is not valid JSON: ") + err.what());
  }
  if (!j.is_object()) throw config_error("config root must be a JSON object");
  detail::reject_unknown_keys(
      j, "config", {"command", "potential", "channel", "overrides", "scan", "output_path"});

  RunConfig cfg;
  if (j.contains("command")) {
    if (!j["command"].is_string()) throw config_error("command must be a string");
    cfg.command = j["command"].get<std::string>();
  }

  if (!j.contains("potential")) throw config_error("config is missing \"potential\"");
  const auto& pot = j["potential"];
  if (!pot.is_object()) throw config_error("potential must be an object");
  detail::reject_unknown_keys(pot, "potential", {"a", "b", "c", "d", "e"});
  cfg.c = detail::require_number(pot, "potential", "c");
  cfg.d = detail::require_number(pot, "potential", "d");
  cfg.e = detail::require_number(pot, "potential", "e");
  if (!(cfg.e > 0.0)) throw config_error("potential.e must be > 0 (confinement)");
  if (pot.contains("a")) cfg.input_a = detail::require_number(pot, "potential", "a");
  if (pot.contains("b")) cfg.input_b = detail::require_number(pot, "potential", "b");

  if (!j.contains("channel")) throw config_error("config is missing \"channel\"");
  const auto& ch = j["channel"];
  if (!ch.is_object()) throw config_error("channel must be an object");
  const bool has_m = ch.contains("m");
  const bool has_nl = ch.contains("N") || ch.contains("ell");
  if (has_m && has_nl)
    throw config_error("channel must use either {\"m\": ...} or {\"N\": ..., \"ell\": ...}");
  if (has_m) {
    detail::reject_unknown_keys(ch, "channel", {"m"});
    if (!ch["m"].is_number_integer()) throw config_error("channel.m must be an integer");
    const int m = ch["m"].get<int>();
    if (m < 0) throw config_error("channel.m must be >= 0");
    cfg.dimension = 2;
    cfg.ell = m;
  } else if (has_nl) {
    detail::reject_unknown_keys(ch, "channel", {"N", "ell"});
    if (!ch.contains("N") || !ch.contains("ell"))
      throw config_error("channel needs both \"N\" and \"ell\"");
    if (!ch["N"].is_number_integer() || !ch["ell"].is_number_integer())
      throw config_error("channel.N and channel.ell must be integers");
    cfg.dimension = ch["N"].get<int>();
    cfg.ell = ch["ell"].get<int>();
  } else {
    throw config_error("channel must contain either \"m\" or \"N\"/\"ell\"");
  }
  cfg.eta = reduce(cfg.dimension, cfg.ell).eta;  // validates N >= 2, ell >= 0

  if (j.contains("overrides")) {
    if (!j["overrides"].is_object()) throw config_error("overrides must be an object");
    detail::parse_overrides(j["overrides"], cfg);
  }

  if (j.contains("scan")) {
    const auto& sc = j["scan"];
    if (!sc.is_object()) throw config_error("scan must be an object");
    detail::reject_unknown_keys(sc, "scan", {"m_max", "c", "d", "e"});
    ScanSpec spec;
    if (sc.contains("m_max")) {
      if (!sc["m_max"].is_number_integer()) throw config_error("scan.m_max must be an integer");
      spec.m_max = sc["m_max"].get<int>();
      if (*spec.m_max < 0) throw config_error("scan.m_max must be >= 0");
    }
    if (sc.contains("c")) spec.c_values = detail::number_list(sc["c"], "scan.c");
    if (sc.contains("d")) spec.d_values = detail::number_list(sc["d"], "scan.d");
    if (sc.contains("e")) spec.e_values = detail::number_list(sc["e"], "scan.e");
    cfg.scan = spec;
  }

  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) throw config_error("output_path must be a string");
    cfg.output_path = j["output_path"].get<std::string>();
  }
  return cfg;
}

}  // namespace octic

#endif  // OCTIC_RUN_CONFIG_HPP
