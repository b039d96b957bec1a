#ifndef OCTIC_REPORT_JSON_HPP
#define OCTIC_REPORT_JSON_HPP

#include <json.hpp>

#include "octic/ansatz.hpp"
#include "octic/format.hpp"
#include "octic/verify.hpp"

namespace octic {

inline nlohmann::json potential_to_json(const OcticPotential& v) {
  return nlohmann::json{{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"e", v.e}};
}

inline nlohmann::json solution_to_json(const ExactSolution& sol) {
  nlohmann::json j{{"alpha", sol.params.alpha},
                   {"beta", sol.params.beta},
                   {"tau", sol.params.tau},
                   {"kappa", sol.params.kappa},
                   {"eta", sol.eta},
                   {"induced_a", sol.induced_a},
                   {"induced_b", sol.induced_b},
                   {"energy", sol.energy},
                   {"potential", potential_to_json(sol.potential)}};
  j["display"] = nlohmann::json{{"alpha", format_display3(sol.params.alpha)},
                                {"beta", format_display3(sol.params.beta)},
                                {"tau", format_display3(sol.params.tau)},
                                {"kappa", format_display3(sol.params.kappa)},
                                {"induced_a", format_display3(sol.induced_a)},
                                {"induced_b", format_display3(sol.induced_b)},
                                {"energy", format_display3(sol.energy)}};
  if (sol.norm_constant) j["norm_constant"] = *sol.norm_constant;
  return j;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json jc{{"name", c.name},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"pass", c.passed}};
    if (!c.message.empty()) jc["message"] = c.message;
    checks.push_back(jc);
  }
  return nlohmann::json{{"overall_pass", report.overall_pass},
                        {"checks", checks},
                        {"domain_r_max", report.domain_r_max},
                        {"solution", solution_to_json(report.solution)}};
}

}  // namespace octic

#endif  // OCTIC_REPORT_JSON_HPP
