#ifndef OCTIC_ANSATZ_HPP
#define OCTIC_ANSATZ_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

#include "octic/errors.hpp"
#include "octic/potential.hpp"

namespace octic {

/// Exponents of the ground-state ansatz
///   p(r) = alpha r^2/2 - beta r^4/4 + tau r^6/6 + kappa ln r,
///   R(r) = exp(p(r)).
/// tau < 0 is the normalizable branch; kappa > 0 keeps r^kappa regular at
/// the origin.
struct AnsatzParams {
  double alpha = 0.0;
  double beta = 0.0;
  double tau = -1.0;
  double kappa = 0.5;
};

/// A closed-form ground-state solution for one angular channel: the ansatz
/// exponents, the channel eta, the exact energy, and the induced potential
/// coefficients (a, b) forced by the constraint system once (c, d, e, eta)
/// are fixed.
struct ExactSolution {
  AnsatzParams params;
  double eta = 0.0;
  double energy = 0.0;
  double induced_a = 0.0;
  double induced_b = 0.0;
  OcticPotential potential;
  std::optional<double> norm_constant;  // N0, filled by normalize()
};

/// Laurent coefficients of [p'' + p'^2] - [V - E + (eta^2 - 1/4)/r^2] at
/// powers r^-2, r^0, r^2, r^4, r^6, r^8, r^10.  `scale` holds the larger
/// magnitude of the two matched terms per power, for relative tests.
struct LaurentResidual {
  static constexpr std::array<int, 7> powers{-2, 0, 2, 4, 6, 8, 10};
  std::array<double, 7> difference{};
  std::array<double, 7> scale{};

  double relative(std::size_t i) const {
    return std::fabs(difference[i]) / std::max(scale[i], 1e-14);
  }
  double max_relative() const {
    double m = 0.0;
    for (std::size_t i = 0; i < difference.size(); ++i) m = std::max(m, relative(i));
    return m;
  }
};

/// Solves the constraint system for the channel eta:
///   tau = -sqrt(e)          (normalizable branch)
///   kappa = eta + 1/2       (root of kappa(kappa-1) = eta^2 - 1/4 regular at 0)
///   beta = d/(2 tau), alpha = (c - beta^2)/(2 tau)
///   a = alpha^2 - 2 beta kappa - 3 beta
///   b = 2 alpha beta - tau (5 + 2 kappa)
///   E = -alpha (1 + 2 kappa)
/// Every quantity is computed twice, by direct substitution and by the
/// closed forms in (c, d, e, kappa); a relative mismatch above 1e-10 is an
/// internal-consistency error.
inline ExactSolution solve_constraints(double c, double d, double e, double eta) {
  if (!(e > 0.0)) throw domain_error("solve_constraints: e must be > 0");
  if (!(eta >= 0.0)) throw domain_error("solve_constraints: eta must be >= 0");

  ExactSolution sol;
  const double se = std::sqrt(e);
  const double tau = -se;
  const double kappa = eta + 0.5;
  const double beta = d / (2.0 * tau);
  const double alpha = (c - beta * beta) / (2.0 * tau);

  const double a_direct = alpha * alpha - 2.0 * beta * kappa - 3.0 * beta;
  const double b_direct = 2.0 * alpha * beta - tau * (5.0 + 2.0 * kappa);
  const double energy_direct = -alpha * (1.0 + 2.0 * kappa);

  // Closed forms in (c, d, e, kappa) only.
  const double beta_closed = -d / (2.0 * se);
  const double alpha_closed = (d * d - 4.0 * c * e) / (8.0 * e * se);
  const double a_closed = (d * d * d * d - 8.0 * c * e * d * d + 16.0 * c * c * e * e +
                           64.0 * d * e * e * se * (kappa + 1.5)) /
                          (64.0 * e * e * e);
  const double b_closed =
      (8.0 * e * e * se * (5.0 + 2.0 * kappa) - d * (d * d - 4.0 * e * c)) / (8.0 * e * e);
  const double energy_closed = -(1.0 + 2.0 * kappa) * (d * d - 4.0 * c * e) / (8.0 * e * se);

  auto consistent = [](double x, double y) {
    const double scale = std::max({std::fabs(x), std::fabs(y), 1e-30});
    return std::fabs(x - y) <= 1e-10 * scale;
  };
  if (!consistent(beta, beta_closed) || !consistent(alpha, alpha_closed) ||
      !consistent(a_direct, a_closed) || !consistent(b_direct, b_closed) ||
      !consistent(energy_direct, energy_closed)) {
    throw convergence_error(
        "solve_constraints: direct substitution and closed forms disagree beyond 1e-10");
  }

  sol.params = AnsatzParams{alpha, beta, tau, kappa};
  sol.eta = eta;
  sol.energy = energy_direct;
  sol.induced_a = a_direct;
  sol.induced_b = b_direct;
  sol.potential = OcticPotential{a_direct, b_direct, c, d, e};
  return sol;
}

/// Re-derives the constraint system independently: expands p'' + p'^2 by
/// squaring p' = alpha r - beta r^3 + tau r^5 + kappa/r as a Laurent
/// polynomial (term-by-term convolution, no use of the solved equations)
/// and subtracts the target coefficients of V - E + (eta^2 - 1/4)/r^2.
/// This is the primary anti-typo oracle.
inline LaurentResidual match_coefficients(const ExactSolution& sol) {
  const AnsatzParams& p = sol.params;

  // p' as (power, coefficient) pairs.
  const std::array<int, 4> dpow{-1, 1, 3, 5};
  const std::array<double, 4> dcoef{p.kappa, p.alpha, -p.beta, p.tau};

  auto index_of = [](int power) { return static_cast<std::size_t>((power + 2) / 2); };

  std::array<double, 7> lhs{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) lhs[index_of(dpow[i] + dpow[j])] += dcoef[i] * dcoef[j];
  // p'' = alpha - 3 beta r^2 + 5 tau r^4 - kappa r^-2.
  lhs[index_of(-2)] += -p.kappa;
  lhs[index_of(0)] += p.alpha;
  lhs[index_of(2)] += -3.0 * p.beta;
  lhs[index_of(4)] += 5.0 * p.tau;

  std::array<double, 7> rhs{};
  rhs[index_of(-2)] = sol.eta * sol.eta - 0.25;
  rhs[index_of(0)] = -sol.energy;
  rhs[index_of(2)] = sol.induced_a;
  rhs[index_of(4)] = -sol.induced_b;
  rhs[index_of(6)] = sol.potential.c;
  rhs[index_of(8)] = -sol.potential.d;
  rhs[index_of(10)] = sol.potential.e;

  LaurentResidual out;
  for (std::size_t i = 0; i < 7; ++i) {
    out.difference[i] = lhs[i] - rhs[i];
    out.scale[i] = std::max(std::fabs(lhs[i]), std::fabs(rhs[i]));
  }
  return out;
}

/// Evaluable closed-form radial wavefunction R(r) = r^kappa exp(poly part),
/// unnormalized.  Also exposes p and its exact derivatives for the ODE
/// residual and peak finding.
class RadialWavefunction {
 public:
  explicit RadialWavefunction(const AnsatzParams& p) : p_(p) {}

  /// p(r) = kappa ln r + alpha r^2/2 - beta r^4/4 + tau r^6/6, r > 0.
  double log_amplitude(double r) const { return p_.kappa * std::log(r) + polynomial_part(r); }

  double polynomial_part(double r) const {
    const double s = r * r;
    return s * (0.5 * p_.alpha + s * (-0.25 * p_.beta + s * (p_.tau / 6.0)));
  }

  /// p'(r) = alpha r - beta r^3 + tau r^5 + kappa/r.
  double p_prime(double r) const {
    return p_.alpha * r - p_.beta * r * r * r + p_.tau * r * r * r * r * r + p_.kappa / r;
  }

  /// p''(r) = alpha - 3 beta r^2 + 5 tau r^4 - kappa/r^2.
  double p_double_prime(double r) const {
    const double s = r * r;
    return p_.alpha - 3.0 * p_.beta * s + 5.0 * p_.tau * s * s - p_.kappa / s;
  }

  double operator()(double r) const {
    if (r < 0.0) throw domain_error("RadialWavefunction: r must be >= 0");
    if (r == 0.0) {
      if (p_.kappa > 0.0) return 0.0;
      if (p_.kappa == 0.0) return 1.0;
      return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_amplitude(r));
  }

  const AnsatzParams& params() const { return p_; }

 private:
  AnsatzParams p_;
};

inline RadialWavefunction build_wavefunction(const ExactSolution& sol) {
  return RadialWavefunction(sol.params);
}

/// Largest positive root of p'(r) = 0 (the wavefunction peak), or 0 when p'
/// has no positive root.  In s = r^2 the root equation is the cubic
///   q(s) = kappa + alpha s - beta s^2 + tau s^3 = 0;
/// scan [0, Cauchy bound] for the last sign change and bisect inside it.
inline double peak_radius(const AnsatzParams& p) {
  if (!(p.tau < 0.0)) throw domain_error("peak_radius: tau must be < 0");
  auto q = [&](double s) { return p.kappa + s * (p.alpha + s * (-p.beta + s * p.tau)); };
  const double bound =
      1.0 + std::max({std::fabs(p.kappa), std::fabs(p.alpha), std::fabs(p.beta)}) /
                std::fabs(p.tau);
  constexpr int kScan = 4096;
  const double step = bound / kScan;
  double lo = -1.0, hi = -1.0;
  double s_prev = bound, q_prev = q(bound);
  for (int i = kScan - 1; i >= 0; --i) {
    const double s = step * i;
    const double qs = q(s);
    if (qs > 0.0 && q_prev <= 0.0) {
      lo = s;
      hi = s_prev;
      break;
    }
    s_prev = s;
    q_prev = qs;
  }
  if (lo < 0.0) return 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-17 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) > 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

inline double peak_radius(const ExactSolution& sol) { return peak_radius(sol.params); }

/// Radius where |R| has fallen to `eps` times its maximum, by doubling and
/// bisection on log R beyond the peak.
inline double decay_radius(const ExactSolution& sol, double eps = 1e-14) {
  const RadialWavefunction R(sol.params);
  const double rstar = std::max(peak_radius(sol.params), 1e-6);
  const double target = R.log_amplitude(rstar) + std::log(eps);
  double hi = std::max(2.0 * rstar, 1.0);
  while (R.log_amplitude(hi) > target) hi *= 2.0;
  double lo = rstar;
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (R.log_amplitude(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

/// Result of the inverse (solvability) check: given all five coefficients
/// and a channel, recompute the induced (a, b) from (c, d, e, eta) and
/// compare against the stated values.
struct SolvabilityCheck {
  bool solvable = false;
  double a_mismatch = 0.0;  // relative
  double b_mismatch = 0.0;  // relative
  ExactSolution solution;
};

inline SolvabilityCheck check_solvability(const OcticPotential& v, double eta,
                                          double rel_tol = 1e-9) {
  SolvabilityCheck out;
  out.solution = solve_constraints(v.c, v.d, v.e, eta);
  auto rel = [](double want, double got) {
    return std::fabs(want - got) / std::max({std::fabs(want), std::fabs(got), 1e-30});
  };
  out.a_mismatch = rel(v.a, out.solution.induced_a);
  out.b_mismatch = rel(v.b, out.solution.induced_b);
  out.solvable = out.a_mismatch <= rel_tol && out.b_mismatch <= rel_tol;
  return out;
}

}  // namespace octic

#endif  // OCTIC_ANSATZ_HPP
