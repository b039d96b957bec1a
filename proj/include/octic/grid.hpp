#ifndef OCTIC_GRID_HPP
#define OCTIC_GRID_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "octic/errors.hpp"

namespace octic {

/// Uniformly sampled radial function: values[i] holds f(r_min + i*h).
/// Grids never touch r = 0; the centrifugal term and the r^rho lift are
/// singular there.
struct GridFunction {
  double r_min = 0.0;
  double h = 0.0;
  std::vector<double> values;

  GridFunction() = default;

  GridFunction(double r_min_, double h_, std::vector<double> values_)
      : r_min(r_min_), h(h_), values(std::move(values_)) {
    if (!(r_min > 0.0)) throw domain_error("GridFunction: r_min must be > 0");
    if (!(h > 0.0)) throw domain_error("GridFunction: h must be > 0");
    if (values.size() < 3) throw domain_error("GridFunction: n must be >= 3");
    for (double v : values) {
      if (!std::isfinite(v)) throw domain_error("GridFunction: values must be finite");
    }
  }

  std::size_t size() const { return values.size(); }
  double r(std::size_t i) const { return r_min + static_cast<double>(i) * h; }

  template <typename F>
  static GridFunction sample(double r_min_, double h_, std::size_t n, F&& f) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(r_min_ + static_cast<double>(i) * h_);
    return GridFunction(r_min_, h_, std::move(v));
  }
};

}  // namespace octic

#endif  // OCTIC_GRID_HPP
