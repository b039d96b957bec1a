#ifndef OCTIC_NORMALIZE_HPP
#define OCTIC_NORMALIZE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "octic/ansatz.hpp"
#include "octic/errors.hpp"
#include "octic/quadrature.hpp"

namespace octic {

struct NormalizationResult {
  double omega = 0.0;       // integral of |R|^2 over (0, inf)
  double n0 = 0.0;          // omega^{-1/2}
  double log_omega = 0.0;   // honest value even when omega over/underflows
  double truncation_radius = 0.0;
  double abs_error_estimate = 0.0;
};

struct NormalizeOptions {
  double rel_tol = 1e-9;
  int initial_panels = 8;
};

namespace detail {

/// log of the integrand maximum (the scale that keeps exp() in range).
/// For kappa > 0 the maximum sits at the largest root of p'; for kappa = 0
/// the origin (where 2p -> 0) competes with any interior peak; for
/// kappa in (-1/2, 0) the integrand is unbounded at the origin and a small
/// reference point provides the scale.
inline double integrand_log_scale(const RadialWavefunction& R, double r_peak) {
  const double kappa = R.params().kappa;
  const double interior =
      r_peak > 0.0 ? 2.0 * R.log_amplitude(r_peak) : -std::numeric_limits<double>::infinity();
  if (kappa > 0.0) return interior;
  if (kappa == 0.0) return std::max(interior, 0.0);
  return std::max(interior, 2.0 * R.log_amplitude(1e-6));
}

}  // namespace detail

/// omega = integral over (0, inf) of |R(r)|^2 dr, by adaptive Gauss-Kronrod
/// subdivision on [0, R_trunc].  R_trunc is the radius where the integrand
/// has fallen below 1e-16 of its maximum; it is then doubled once and the
/// change asserted below rel_tol.  The integrand is the square of the
/// wavefunction evaluation itself (its exponents are exactly twice those of
/// R); internally it is scaled by the peak value so that solutions of any
/// amplitude integrate without overflow.
inline NormalizationResult normalize(const ExactSolution& sol, const NormalizeOptions& opt = {}) {
  const AnsatzParams& p = sol.params;
  if (!(p.kappa > -0.5))
    throw domain_error("normalize: kappa <= -1/2, |R|^2 diverges at the origin");
  if (!(p.tau < 0.0)) throw domain_error("normalize: tau >= 0, |R|^2 diverges at infinity");

  const RadialWavefunction R(p);
  const double r_peak = peak_radius(p);
  const double g_max = detail::integrand_log_scale(R, r_peak);
  // scaled integrand: exp(2 p(r) - g_max), i.e. |R(r)|^2 over its maximum
  auto integrand = [&](double r) {
    if (r <= 0.0) return p.kappa > 0.0 ? 0.0 : (p.kappa == 0.0 ? std::exp(-g_max) : 0.0);
    return std::exp(2.0 * R.log_amplitude(r) - g_max);
  };

  // truncation radius: integrand below 1e-16 of its maximum
  const double log_cut = std::log(1e-16);
  auto log_scaled = [&](double r) { return 2.0 * R.log_amplitude(r) - g_max; };
  double hi = std::max(2.0 * r_peak, 1.0);
  while (log_scaled(hi) > log_cut) hi *= 2.0;
  double lo = std::max(r_peak, hi / 4096.0);
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_scaled(mid) > log_cut ? lo : hi) = mid;
  }
  const double r_trunc = hi;

  auto integrate_to = [&](double upper) {
    // rough pass fixes the absolute tolerance for refinement
    const QuadratureResult rough =
        adaptive_gauss_kronrod(integrand, 0.0, upper, 1e300, opt.initial_panels, 0);
    const double abs_tol = opt.rel_tol * std::fabs(rough.integral);
    return adaptive_gauss_kronrod(integrand, 0.0, upper, abs_tol, opt.initial_panels);
  };

  const QuadratureResult first = integrate_to(r_trunc);
  const QuadratureResult doubled = integrate_to(2.0 * r_trunc);
  const double change = std::fabs(doubled.integral - first.integral);
  if (change > opt.rel_tol * std::fabs(doubled.integral)) {
    std::ostringstream msg;
    msg << "normalize: doubling the truncation radius moved omega by " << change
        << " (relative " << change / std::fabs(doubled.integral) << " > rel_tol "
        << opt.rel_tol << ")";
    throw convergence_error(msg.str());
  }

  NormalizationResult out;
  out.log_omega = g_max + std::log(doubled.integral);
  out.omega = std::exp(g_max) * doubled.integral;
  out.n0 = 1.0 / std::sqrt(out.omega);
  out.truncation_radius = 2.0 * r_trunc;
  out.abs_error_estimate = std::exp(g_max) * (doubled.abs_error_estimate + change);
  return out;
}

}  // namespace octic

#endif  // OCTIC_NORMALIZE_HPP
