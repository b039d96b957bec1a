#ifndef OCTIC_EIGENSOLVER_HPP
#define OCTIC_EIGENSOLVER_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "octic/errors.hpp"
#include "octic/grid.hpp"

namespace octic {

struct SchemeDescriptor {
  int stencil_order = 2;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double h = 0.0;
  int n = 0;
  std::string boundary = "dirichlet";
};

struct EigenResult {
  std::vector<double> eigenvalues;     // ascending, at the requested grid
  std::vector<double> extrapolated;    // Richardson combination of h and h/2
  std::vector<double> error_estimate;  // |lambda_h - lambda_{h/2}| / 3
  std::vector<GridFunction> eigenvectors;  // unit discrete L2 norm
  SchemeDescriptor scheme;
};

namespace detail {

/// Symmetric tridiagonal operator with constant off-diagonal.
struct Tridiag {
  std::vector<double> diag;
  double off = 0.0;
};

/// Number of eigenvalues strictly below x, by Sturm sequence counting on
/// the shifted LDL^T recurrence.
inline int sturm_count_below(const Tridiag& t, double x) {
  const double off2 = t.off * t.off;
  const double pivmin = std::max(off2, 1.0) * 1e-292;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    q = t.diag[i] - x - (i ? off2 / q : 0.0);
    if (std::fabs(q) < pivmin) q = -pivmin;  // zero pivot counts as negative
    if (q < 0.0) ++count;
  }
  return count;
}

/// k smallest eigenvalues by bisection inside the Gershgorin interval.
inline std::vector<double> smallest_eigenvalues(const Tridiag& t, int k) {
  const auto [dmin, dmax] = std::minmax_element(t.diag.begin(), t.diag.end());
  double glo = *dmin - 2.0 * std::fabs(t.off);
  double ghi = *dmax + 2.0 * std::fabs(t.off);
  std::vector<double> out(static_cast<std::size_t>(k));
  double lo_base = glo;
  for (int j = 1; j <= k; ++j) {
    double lo = lo_base, hi = ghi;
    while (hi - lo > 2.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::fabs(lo), std::fabs(hi), 1.0})) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count_below(t, mid) >= j)
        hi = mid;
      else
        lo = mid;
    }
    out[static_cast<std::size_t>(j - 1)] = 0.5 * (lo + hi);
    lo_base = lo;  // later eigenvalues lie to the right
  }
  return out;
}

/// One inverse-iteration solve of (T - sigma I) x = b, Gaussian elimination
/// with partial pivoting (fill-in limited to a second superdiagonal).
inline void shifted_solve(const Tridiag& t, double sigma, std::vector<double>& x) {
  const std::size_t n = t.diag.size();
  std::vector<double> du(n, 0.0), du2(n, 0.0), dm(n);
  std::vector<double> sub(n, t.off);
  for (std::size_t i = 0; i < n; ++i) dm[i] = t.diag[i] - sigma;
  for (std::size_t i = 0; i + 1 < n; ++i) du[i] = t.off;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::fabs(dm[i]) >= std::fabs(sub[i + 1])) {
      const double piv = dm[i] == 0.0 ? 1e-300 : dm[i];
      const double m = sub[i + 1] / piv;
      dm[i + 1] -= m * du[i];
      x[i + 1] -= m * x[i];
      // du2 stays 0 in the no-swap branch
    } else {
      const double m = dm[i] / sub[i + 1];
      dm[i] = sub[i + 1];
      const double tmp_du = du[i];
      du[i] = dm[i + 1];
      dm[i + 1] = tmp_du - m * dm[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -m * du[i + 1];
      }
      std::swap(x[i], x[i + 1]);
      x[i + 1] -= m * x[i];
    }
  }
  // back substitution
  if (dm[n - 1] == 0.0) dm[n - 1] = 1e-300;
  x[n - 1] /= dm[n - 1];
  if (n >= 2) {
    if (dm[n - 2] == 0.0) dm[n - 2] = 1e-300;
    x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dm[n - 2];
  }
  for (std::size_t ii = n; ii >= 3; --ii) {
    const std::size_t i = ii - 3;
    if (dm[i] == 0.0) dm[i] = 1e-300;
    x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dm[i];
  }
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Inverse iteration for the eigenvector of an isolated eigenvalue.
inline std::vector<double> inverse_iteration(const Tridiag& t, double sigma, int max_iter = 50) {
  const std::size_t n = t.diag.size();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> prev;
  for (int it = 0; it < max_iter; ++it) {
    prev = v;
    shifted_solve(t, sigma, v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv))
      throw convergence_error("inverse iteration produced a non-finite vector");
    for (double& x : v) x /= nv;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * prev[i];
    if (std::fabs(std::fabs(dot) - 1.0) < 1e-13) {
      if (dot < 0.0)
        for (double& x : v) x = -x;
      return v;
    }
  }
  throw convergence_error("inverse iteration did not converge within " +
                          std::to_string(max_iter) + " sweeps");
}

/// Discrete centrifugal channel term.  The diagonal entry that makes the
/// 3-point stencil exact on the small-r behavior u = r^s, s = eta + 1/2:
///   c_i = [g(r_i - h) - 2 g(r_i) + g(r_i + h)] / (h^2 g(r_i)),  g(r) = r^s,
/// with g taken as 0 at and below the left Dirichlet endpoint.  For r >> h
/// this approaches (eta^2 - 1/4)/r^2 to O(h^2); for s = 1 (eta = 1/2) it
/// vanishes identically, matching the absent centrifugal term.  The naive
/// pointwise value converges only logarithmically in the critical eta = 0
/// channel, which would bury the eigenvalue comparison.
inline double discrete_centrifugal(double r, double h, double r_lo, double s) {
  const double left = r - h <= r_lo ? 0.0 : std::pow(r - h, s);
  return (left - 2.0 * std::pow(r, s) + std::pow(r + h, s)) / (h * h * std::pow(r, s));
}

inline Tridiag build_operator(const std::function<double(double)>& potential, double eta,
                              double r_lo, double h, int n) {
  const double s = eta + 0.5;
  Tridiag t;
  t.off = -1.0 / (h * h);
  t.diag.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double r = r_lo + i * h;
    t.diag[static_cast<std::size_t>(i - 1)] =
        2.0 / (h * h) + potential(r) + discrete_centrifugal(r, h, r_lo, s);
  }
  return t;
}

}  // namespace detail

/// Finite-difference eigensolver for -u'' + [V(r) + (eta^2-1/4)/r^2] u = E u
/// on (r_lo, r_hi) with Dirichlet endpoints.  `potential` is the bare
/// potential; the centrifugal channel is added internally in its
/// grid-exact discrete form (see discrete_centrifugal).  Interior grid:
/// r_i = r_lo + i h, i = 1..n, h = (r_hi - r_lo)/(n+1).  Pass r_lo = 0 for
/// radial channel problems; the first grid point then sits at r = h and the
/// origin behavior r^{eta+1/2} is captured by the boundary row.
///
/// The k smallest eigenvalues come from Sturm-sequence bisection, the
/// eigenvectors from inverse iteration, and the per-eigenvalue error
/// estimate from a second solve at h/2 with Richardson differencing.
inline EigenResult fd_eigensolve(const std::function<double(double)>& potential, double eta,
                                 double r_lo, double r_hi, int n, int k,
                                 bool want_vectors = true) {
  if (!(r_lo >= 0.0) || !(r_hi > r_lo))
    throw domain_error("fd_eigensolve: need 0 <= r_lo < r_hi");
  if (n < 50) throw domain_error("fd_eigensolve: n must be >= 50");
  if (k < 1) throw domain_error("fd_eigensolve: k must be >= 1");
  if (k > n - 2)
    throw domain_error("fd_eigensolve: k = " + std::to_string(k) + " exceeds n - 2");

  const double h = (r_hi - r_lo) / (n + 1);
  const detail::Tridiag t = detail::build_operator(potential, eta, r_lo, h, n);
  EigenResult out;
  out.eigenvalues = detail::smallest_eigenvalues(t, k);
  out.scheme = SchemeDescriptor{2, r_lo, r_hi, h, n, "dirichlet"};

  // refined grid: n2 = 2n + 1 halves h exactly
  const int n2 = 2 * n + 1;
  const double h2 = (r_hi - r_lo) / (n2 + 1);
  const detail::Tridiag t2 = detail::build_operator(potential, eta, r_lo, h2, n2);
  const std::vector<double> fine = detail::smallest_eigenvalues(t2, k);
  out.extrapolated.resize(static_cast<std::size_t>(k));
  out.error_estimate.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    out.extrapolated[ju] = (4.0 * fine[ju] - out.eigenvalues[ju]) / 3.0;
    out.error_estimate[ju] = std::fabs(fine[ju] - out.eigenvalues[ju]) / 3.0;
  }

  if (want_vectors) {
    out.eigenvectors.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      std::vector<double> v =
          detail::inverse_iteration(t, out.eigenvalues[static_cast<std::size_t>(j)]);
      // unit discrete L2 norm, positive at the largest component
      double nrm = detail::norm2(v) * std::sqrt(h);
      std::size_t imax = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
      const double sign = v[imax] < 0.0 ? -1.0 : 1.0;
      for (double& x : v) x *= sign / nrm;
      out.eigenvectors.emplace_back(r_lo + h, h, std::move(v));
    }
  }
  return out;
}

}  // namespace octic

#endif  // OCTIC_EIGENSOLVER_HPP
