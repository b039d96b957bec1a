#ifndef OCTIC_POTENTIAL_HPP
#define OCTIC_POTENTIAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "octic/errors.hpp"
#include "octic/reduction.hpp"

namespace octic {

/// Coefficients of V(r) = a r^2 - b r^4 + c r^6 - d r^8 + e r^10, stored
/// exactly as the symbols appear in that form (so a worked example with a
/// +2 r^8 term stores d = -2).  e > 0 is required for confinement.
struct OcticPotential {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 1.0;
};

/// Horner evaluation in r^2.  V(0) = 0 by construction (no constant term).
inline double evaluate(const OcticPotential& v, double r) {
  if (!std::isfinite(r)) throw domain_error("evaluate: r must be finite");
  const double s = r * r;
  return s * (v.a + s * (-v.b + s * (v.c + s * (-v.d + s * v.e))));
}

/// V(r) + (eta^2 - 1/4)/r^2.  Reuses centrifugal_term so the difference
/// against evaluate() is bit-exact.
inline double effective_potential(const OcticPotential& v, double eta, double r) {
  return evaluate(v, r) + centrifugal_term(eta, r);
}

struct PotentialValidation {
  bool valid = true;
  std::string fatal;                        // non-empty iff e <= 0
  std::vector<std::string> warnings;        // e.g. d >= 0
  std::optional<double> positivity_radius;  // V(r) > 0 for all r beyond this
};

namespace detail {

/// Radius beyond which e r^10 dominates |a|r^2 + |b|r^4 + |c|r^6 + |d|r^8,
/// hence V(r) > 0.  In s = r^2 the bound polynomial
///   g(s) = e s^4 - |d| s^3 - |c| s^2 - |b| s - |a|
/// has exactly one positive root (one sign change); bisect for it.
inline double positivity_radius_bound(const OcticPotential& v) {
  const double aa = std::fabs(v.a), ab = std::fabs(v.b), ac = std::fabs(v.c),
               ad = std::fabs(v.d);
  if (aa == 0.0 && ab == 0.0 && ac == 0.0 && ad == 0.0) return 0.0;
  auto g = [&](double s) {
    return s * (s * (s * (v.e * s - ad) - ac) - ab) - aa;
  };
  double hi = 1.0;
  while (g(hi) <= 0.0) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) <= 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(hi);
}

}  // namespace detail

/// e <= 0 is fatal (confinement, and tau^2 = e needs a real root).  d >= 0
/// only warns: the constraint system is well defined for either sign and
/// normalizability is governed by tau, not d.
inline PotentialValidation validate(const OcticPotential& v) {
  PotentialValidation report;
  if (!(v.e > 0.0)) {
    report.valid = false;
    report.fatal = "e must be > 0 (confinement: V -> +inf as r -> inf)";
    return report;
  }
  if (v.d >= 0.0) {
    report.warnings.push_back("d >= 0 contradicts the stated sign condition d < 0");
  }
  report.positivity_radius = detail::positivity_radius_bound(v);
  return report;
}

}  // namespace octic

#endif  // OCTIC_POTENTIAL_HPP
