#ifndef OCTIC_VERIFY_HPP
#define OCTIC_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "octic/ansatz.hpp"
#include "octic/eigensolver.hpp"
#include "octic/errors.hpp"
#include "octic/normalize.hpp"
#include "octic/potential.hpp"
#include "octic/reduction.hpp"
#include "octic/shooting.hpp"

namespace octic {

/// Uniform grid specification for the residual oracle (first point r_min,
/// spacing h, n points).
struct GridSpec {
  double r_min = 0.0;
  double h = 1e-3;
  int n = 4000;
};

/// Sup-norm ODE defect of a closed-form solution:
///   max_i |[p'' + p'^2 - (V - E + (eta^2-1/4)/r^2)](r_i)| * |R(r_i)| / max_i |R(r_i)|
/// with p', p'' from the exact derivative formulas (no numerical
/// differentiation).  R enters through exp(p - max p) so arbitrarily scaled
/// solutions stay in range.
inline double residual(const ExactSolution& sol, const GridSpec& grid) {
  if (!(grid.r_min > 0.0)) throw domain_error("residual: grid must not touch r = 0");
  if (!(grid.h > 0.0) || grid.n < 3) throw domain_error("residual: need h > 0 and n >= 3");
  const RadialWavefunction R(sol.params);
  std::vector<double> log_amp(static_cast<std::size_t>(grid.n));
  double log_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r_min + i * grid.h;
    log_amp[static_cast<std::size_t>(i)] = R.log_amplitude(r);
    log_max = std::max(log_max, log_amp[static_cast<std::size_t>(i)]);
  }
  double sup = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r_min + i * grid.h;
    const double pp = R.p_prime(r);
    const double defect = R.p_double_prime(r) + pp * pp -
                          (evaluate(sol.potential, r) - sol.energy +
                           centrifugal_term(sol.eta, r));
    sup = std::max(sup,
                   std::fabs(defect) * std::exp(log_amp[static_cast<std::size_t>(i)] - log_max));
  }
  return sup;
}

/// Tolerances and grid defaults for the verification report.  All
/// overridable from the run config.
struct VerifyPolicy {
  double coefficient_rel_tol = 1e-11;  // Laurent residuals, relative
  double residual_tol = 1e-11;        // ODE defect over max |R|
  double eigenvalue_tol = 1e-5;       // |FD Richardson - closed form|
  double shoot_tol = 1e-5;            // |shooting - closed form|
  double quadrature_rel_tol = 1e-9;
  double normalization_tol = 1e-8;    // |integral of (N0 R)^2 - 1|
  double bisection_tol = 1e-10;
  int grid_points = 4000;
  double r_max = 0.0;                 // <= 0: automatic, 1.5 x decay radius
};

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string message;  // non-empty on error or extra detail
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall_pass = false;
  ExactSolution solution;
  double domain_r_max = 0.0;
};

/// Domain rule: 1.5 times the radius where |R| decays to 1e-14 of its peak.
inline double default_r_max(const ExactSolution& sol) { return 1.5 * decay_radius(sol); }

/// Runs every oracle against a closed-form solution and collects one
/// pass/fail entry per check; oracle exceptions become failed checks, the
/// report is always complete.
inline VerificationReport verify_solution(const ExactSolution& sol,
                                          const VerifyPolicy& policy = {}) {
  VerificationReport report;
  report.solution = sol;
  const double r_max = policy.r_max > 0.0 ? policy.r_max : default_r_max(sol);
  report.domain_r_max = r_max;
  const int n = policy.grid_points;
  const double h = r_max / (n + 1);
  auto bare = [&](double r) { return evaluate(sol.potential, r); };

  auto run_check = [&](const std::string& name, double tolerance,
                       const std::function<double()>& observe) {
    CheckResult c;
    c.name = name;
    c.tolerance = tolerance;
    try {
      c.observed = observe();
      c.passed = std::fabs(c.observed) <= tolerance;
    } catch (const std::exception& err) {
      c.passed = false;
      c.message = err.what();
    }
    report.checks.push_back(std::move(c));
  };

  run_check("match_coefficients", policy.coefficient_rel_tol,
            [&] { return match_coefficients(sol).max_relative(); });

  run_check("ode_residual", policy.residual_tol,
            [&] { return residual(sol, GridSpec{h, h, n}); });

  EigenResult fd;
  bool have_fd = false;
  run_check("fd_eigenvalue", policy.eigenvalue_tol, [&] {
    fd = fd_eigensolve(bare, sol.eta, 0.0, r_max, n, 2, false);
    have_fd = true;
    return fd.extrapolated.front() - sol.energy;
  });

  run_check("shooting_eigenvalue", policy.shoot_tol, [&] {
    double lo = sol.energy, hi = sol.energy;
    if (have_fd) {
      const double gap = std::max(fd.eigenvalues[1] - fd.eigenvalues[0], 1e-6);
      lo = fd.eigenvalues[0] - 0.4 * gap;
      hi = fd.eigenvalues[0] + 0.4 * gap;
    } else {
      const double spread = std::max(0.5, 0.1 * std::fabs(sol.energy));
      lo -= spread;
      hi += spread;
    }
    ShootOptions opt;
    opt.r_min = h;
    opt.r_max = r_max;
    opt.steps = n;
    opt.bisection_tol = policy.bisection_tol;
    return shoot(bare, sol.eta, {lo, hi}, 0, opt) - sol.energy;
  });

  run_check("normalization", policy.normalization_tol, [&] {
    NormalizeOptions nopt;
    nopt.rel_tol = policy.quadrature_rel_tol;
    const NormalizationResult norm = normalize(sol, nopt);
    report.solution.norm_constant = norm.n0;
    // independent recomputation of the unit norm
    const RadialWavefunction R(sol.params);
    auto squared = [&](double r) {
      const double v = norm.n0 * R(r);
      return v * v;
    };
    const QuadratureResult unit = adaptive_gauss_kronrod(
        squared, 0.0, norm.truncation_radius, policy.quadrature_rel_tol);
    return unit.integral - 1.0;
  });

  report.overall_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return c.passed; });
  return report;
}

}  // namespace octic

#endif  // OCTIC_VERIFY_HPP
