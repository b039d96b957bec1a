#ifndef OCTIC_REDUCTION_HPP
#define OCTIC_REDUCTION_HPP

#include <cmath>
#include <string>

#include "octic/errors.hpp"
#include "octic/grid.hpp"

namespace octic {

/// Channel data for the reduction of the N-dimensional radial equation to
/// the 2D-like form.  rho is the exponent of the wavefunction substitution
/// psi = r^rho R, eta the centrifugal channel parameter.  Both are exact in
/// floating point (half-integer arithmetic).
struct ReductionParams {
  int dimension = 2;  // N
  int ell = 0;
  double rho = -0.5;  // -(N-1)/2
  double eta = 0.0;   // ell + (N-2)/2
};

/// rho = -(N-1)/2, eta = ell + (N-2)/2.  Pure; rejects N < 2 and ell < 0.
inline ReductionParams reduce(int dimension, int ell) {
  if (dimension < 2)
    throw domain_error("reduce: dimension N must be >= 2, got " + std::to_string(dimension));
  if (ell < 0) throw domain_error("reduce: ell must be >= 0, got " + std::to_string(ell));
  ReductionParams p;
  p.dimension = dimension;
  p.ell = ell;
  p.rho = -0.5 * static_cast<double>(dimension - 1);
  p.eta = static_cast<double>(ell) + 0.5 * static_cast<double>(dimension - 2);
  return p;
}

/// The channel term (eta^2 - 1/4)/r^2 of the reduced radial equation.
inline double centrifugal_term(double eta, double r) {
  if (!(r > 0.0)) throw domain_error("centrifugal_term: r must be > 0");
  return (eta * eta - 0.25) / (r * r);
}

/// psi(r) = r^{-(N-1)/2} R(r) on the same grid.
inline GridFunction lift_wavefunction(const GridFunction& R, int dimension) {
  if (dimension < 2)
    throw domain_error("lift_wavefunction: dimension N must be >= 2, got " +
                       std::to_string(dimension));
  const double rho = -0.5 * static_cast<double>(dimension - 1);
  std::vector<double> psi(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    const double r = R.r(i);
    if (!(r > 0.0)) throw domain_error("lift_wavefunction: grid touches r <= 0");
    psi[i] = std::pow(r, rho) * R.values[i];
  }
  return GridFunction(R.r_min, R.h, std::move(psi));
}

}  // namespace octic

#endif  // OCTIC_REDUCTION_HPP
