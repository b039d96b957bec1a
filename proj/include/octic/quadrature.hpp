#ifndef OCTIC_QUADRATURE_HPP
#define OCTIC_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <vector>

#include "octic/errors.hpp"

namespace octic {

struct QuadratureResult {
  double integral = 0.0;
  double abs_error_estimate = 0.0;
  int panels = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK dqk15 constants).
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
inline void gk15_panel(const F& f, double a, double b, double& kronrod, double& gauss) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double k = 0.0, g = 0.0;
  // Gauss-7 nodes are the odd-index Kronrod nodes (center included at j = 7).
  for (std::size_t j = 0; j < 8; ++j) {
    const double x = half * kKronrodNodes[j];
    const double fsum = j == 7 ? f(center) : f(center - x) + f(center + x);
    k += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) g += kGaussWeights[j / 2] * fsum;
  }
  kronrod = half * k;
  gauss = half * g;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7, K15) panel subdivision on [a, b].  Panels
/// whose |K15 - G7| exceeds their share of abs_tol are bisected, up to
/// max_depth.  The error estimate accumulates |K15 - G7| of accepted panels.
template <typename F>
QuadratureResult adaptive_gauss_kronrod(const F& f, double a, double b, double abs_tol,
                                        int initial_panels = 8, int max_depth = 60) {
  if (!(b > a)) throw domain_error("adaptive_gauss_kronrod: need a < b");
  if (initial_panels < 1) throw domain_error("adaptive_gauss_kronrod: initial_panels >= 1");

  struct Panel {
    double a, b, tol;
    int depth;
  };
  QuadratureResult out;
  std::vector<Panel> stack;
  stack.reserve(256);
  const double w = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i)
    stack.push_back({a + i * w, a + (i + 1) * w, abs_tol / initial_panels, 0});

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    double k = 0.0, g = 0.0;
    detail::gk15_panel(f, p.a, p.b, k, g);
    const double err = std::fabs(k - g);
    if (err <= p.tol || p.depth >= max_depth) {
      out.integral += k;
      out.abs_error_estimate += err;
      ++out.panels;
    } else {
      const double mid = 0.5 * (p.a + p.b);
      stack.push_back({p.a, mid, 0.5 * p.tol, p.depth + 1});
      stack.push_back({mid, p.b, 0.5 * p.tol, p.depth + 1});
    }
  }
  return out;
}

}  // namespace octic

#endif  // OCTIC_QUADRATURE_HPP
