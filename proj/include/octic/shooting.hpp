#ifndef OCTIC_SHOOTING_HPP
#define OCTIC_SHOOTING_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "octic/errors.hpp"

namespace octic {

struct ShootOptions {
  double r_min = 0.0;           // start of the outward sweep (0 allowed)
  double r_max = 4.0;           // start of the inward sweep
  int steps = 4000;             // fixed RK4 step count over [r_min, r_max]
  double bisection_tol = 1e-10;
  int max_iterations = 200;
  double match_radius = -1.0;   // < 0: automatic (median of the classically
                                // allowed region at the bracket midpoint)
};

namespace detail {

struct SweepResult {
  double u = 0.0;   // wavefunction at the match point (arbitrary positive scale)
  double du = 0.0;  // derivative at the match point, same scale
  int nodes = 0;
};

/// Outward sweep in the transformed variable v, u = r^s v.  v is analytic
/// through the origin (v(0) = 1, v'(0) = 0), so fixed-step RK4 stays
/// accurate where u itself has the singular r^s shape:
///   v'' = -(2s/r) v' + (V(r) - E) v.
inline SweepResult integrate_outward(const std::function<double(double)>& potential, double s,
                                     double energy, double r_min, double h, int steps_out) {
  auto rhs = [&](double r, const std::array<double, 2>& y) -> std::array<double, 2> {
    if (r <= 0.0) {
      // limit form at the origin, valid with v' = 0 there
      return {y[1], (potential(0.0) - energy) * y[0] / (1.0 + 2.0 * s)};
    }
    return {y[1], -(2.0 * s / r) * y[1] + (potential(r) - energy) * y[0]};
  };
  // two-term series start: v = 1 + c1 r^2, c1 = -E / (2 + 4s)
  const double c1 = -energy / (2.0 + 4.0 * s);
  std::array<double, 2> y{1.0 + c1 * r_min * r_min, 2.0 * c1 * r_min};
  int nodes = 0;
  double prev_sign = y[0] > 0.0 ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);
  for (int j = 0; j < steps_out; ++j) {
    const double r = r_min + j * h;
    const auto k1 = rhs(r, y);
    const auto k2 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const auto k3 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const auto k4 = rhs(r + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
    y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    const double sg = y[0] > 0.0 ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);
    if (sg != 0.0) {
      if (prev_sign != 0.0 && sg != prev_sign) ++nodes;
      prev_sign = sg;
    }
    const double mag = std::fabs(y[0]);
    if (mag > 1e200) {
      y[0] /= mag;
      y[1] /= mag;
    }
  }
  const double r_match = r_min + steps_out * h;
  const double rs = std::pow(r_match, s);
  return {rs * y[0], rs * (s / r_match * y[0] + y[1]), nodes};
}

/// Inward sweep in u itself with the full effective potential.  The start
/// is a WKB-decaying state when r_max is classically forbidden, otherwise a
/// Dirichlet wall (u = 0, inward slope 1).
inline SweepResult integrate_inward(const std::function<double(double)>& potential, double eta,
                                    double energy, double r_max, double h, int steps_in) {
  auto veff = [&](double r) { return potential(r) + (eta * eta - 0.25) / (r * r); };
  auto rhs = [&](double r, const std::array<double, 2>& y) -> std::array<double, 2> {
    return {y[1], (veff(r) - energy) * y[0]};
  };
  const double v_end = veff(r_max);
  std::array<double, 2> y{1.0, -std::sqrt(std::max(v_end - energy, 0.0))};
  if (!(v_end > energy)) y = {0.0, -1.0};
  int nodes = 0;
  double prev_sign = y[0] > 0.0 ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);
  for (int j = 0; j < steps_in; ++j) {
    const double r = r_max - j * h;
    const auto k1 = rhs(r, y);
    const auto k2 = rhs(r - 0.5 * h, {y[0] - 0.5 * h * k1[0], y[1] - 0.5 * h * k1[1]});
    const auto k3 = rhs(r - 0.5 * h, {y[0] - 0.5 * h * k2[0], y[1] - 0.5 * h * k2[1]});
    const auto k4 = rhs(r - h, {y[0] - h * k3[0], y[1] - h * k3[1]});
    y[0] -= h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] -= h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    const double sg = y[0] > 0.0 ? 1.0 : (y[0] < 0.0 ? -1.0 : 0.0);
    if (sg != 0.0) {
      if (prev_sign != 0.0 && sg != prev_sign) ++nodes;
      prev_sign = sg;
    }
    const double mag = std::fabs(y[0]);
    if (mag > 1e200) {
      y[0] /= mag;
      y[1] /= mag;
    }
  }
  return {y[0], y[1], nodes};
}

struct Defect {
  double value = 0.0;
  int nodes = 0;
};

inline Defect shoot_defect(const std::function<double(double)>& potential, double eta,
                           double energy, const ShootOptions& opt, int match_index) {
  const double s = eta + 0.5;
  const double h = (opt.r_max - opt.r_min) / opt.steps;
  const SweepResult out =
      integrate_outward(potential, s, energy, opt.r_min, h, match_index);
  const SweepResult in =
      integrate_inward(potential, eta, energy, opt.r_max, h, opt.steps - match_index);
  const double defect =
      (out.log_derivative - in.log_derivative) /
      (std::fabs(out.log_derivative) + std::fabs(in.log_derivative) + 1.0);
  return {defect, out.nodes + in.nodes};
}

inline int choose_match_index(const std::function<double(double)>& potential, double eta,
                              double e_mid, const ShootOptions& opt) {
  const double h = (opt.r_max - opt.r_min) / opt.steps;
  if (opt.match_radius > 0.0) {
    const int mi = static_cast<int>(std::lround((opt.match_radius - opt.r_min) / h));
    return std::clamp(mi, 1, opt.steps - 1);
  }
  // An off-center quantile of the classically allowed region: deep enough in
  // the well for stable log-derivatives, and away from the symmetric points
  // where low modes put their nodes.
  std::vector<int> allowed;
  for (int i = 1; i < opt.steps; ++i) {
    const double r = opt.r_min + i * h;
    if (potential(r) + (eta * eta - 0.25) / (r * r) <= e_mid) allowed.push_back(i);
  }
  if (allowed.empty()) return std::max(1, opt.steps / 2);
  const std::size_t pick = static_cast<std::size_t>(0.473 * (allowed.size() - 1));
  return std::clamp(allowed[pick], 1, opt.steps - 1);
}

}  // namespace detail

/// Shooting eigensolver: RK4 outward from r_min (series start u ~ r^{eta+1/2},
/// integrated in the regular transformed variable), RK4 inward from r_max,
/// log-derivative mismatch at the match point as the defect, bisection on E
/// inside the caller's bracket.  The converged state's node count must equal
/// target_nodes (0 for the ground state).
inline double shoot(const std::function<double(double)>& potential, double eta,
                    std::pair<double, double> bracket, int target_nodes,
                    const ShootOptions& opt) {
  if (!(opt.r_min >= 0.0) || !(opt.r_max > opt.r_min))
    throw domain_error("shoot: need 0 <= r_min < r_max");
  if (opt.steps < 10) throw domain_error("shoot: steps must be >= 10");
  double lo = bracket.first, hi = bracket.second;
  if (!(lo < hi)) throw domain_error("shoot: bracket must satisfy lo < hi");

  const int match_index = detail::choose_match_index(potential, eta, 0.5 * (lo + hi), opt);
  detail::Defect dlo = detail::shoot_defect(potential, eta, lo, opt, match_index);
  const detail::Defect dhi = detail::shoot_defect(potential, eta, hi, opt, match_index);
  if (dlo.value * dhi.value > 0.0) {
    std::ostringstream msg;
    msg << "shoot: bracket does not straddle a defect sign change: defect(" << lo
        << ") = " << dlo.value << ", defect(" << hi << ") = " << dhi.value;
    throw convergence_error(msg.str());
  }

  int iterations = 0;
  while (hi - lo > opt.bisection_tol && iterations < opt.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const detail::Defect dm = detail::shoot_defect(potential, eta, mid, opt, match_index);
    if (dm.value == 0.0) {
      lo = hi = mid;
      break;
    }
    if (dm.value * dlo.value < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      dlo = dm;
    }
    ++iterations;
  }
  const double energy = 0.5 * (lo + hi);
  const detail::Defect final_state =
      detail::shoot_defect(potential, eta, energy, opt, match_index);
  if (final_state.nodes != target_nodes) {
    std::ostringstream msg;
    msg << "shoot: node-count mismatch: expected " << target_nodes << ", found "
        << final_state.nodes << " at E = " << energy;
    throw convergence_error(msg.str());
  }
  return energy;
}

}  // namespace octic

#endif  // OCTIC_SHOOTING_HPP
