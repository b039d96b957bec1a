#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "octic/ansatz.hpp"
#include "octic/reduction.hpp"

using namespace octic;

TEST_CASE("reduce: two-dimensional identity case") {
  const ReductionParams p = reduce(2, 0);
  CHECK(p.rho == -0.5);
  CHECK(p.eta == 0.0);
}

TEST_CASE("reduce: eta equals m in two dimensions") {
  for (int m = 0; m <= 10; ++m) {
    CHECK(reduce(2, m).eta == static_cast<double>(m));
    CHECK(reduce(2, m).rho == -0.5);
  }
}

TEST_CASE("reduce: direct substitution for N = 3, ell = 1") {
  const ReductionParams p = reduce(3, 1);
  CHECK(p.rho == -1.0);
  CHECK(p.eta == 1.5);
}

TEST_CASE("reduce rejects bad arguments naming the field") {
  CHECK_THROWS_WITH(reduce(1, 0), Catch::Matchers::ContainsSubstring("N"));
  CHECK_THROWS_WITH(reduce(2, -1), Catch::Matchers::ContainsSubstring("ell"));
  CHECK_THROWS_AS(reduce(0, 3), domain_error);
}

TEST_CASE("centrifugal term") {
  CHECK(centrifugal_term(0.5, 0.3) == 0.0);
  CHECK(centrifugal_term(0.5, 7.0) == 0.0);
  CHECK(centrifugal_term(0.0, 1.0) == -0.25);
  CHECK(centrifugal_term(1.5, 2.0) == 0.5);
  CHECK_THROWS_AS(centrifugal_term(1.0, 0.0), domain_error);
  CHECK_THROWS_AS(centrifugal_term(1.0, -1.0), domain_error);
}

TEST_CASE("centrifugal identity over twelve decades of r") {
  for (double eta : {0.0, 0.5, 1.0, 3.0, 5.5}) {
    for (double r = 1e-3; r <= 1e3; r *= 1.77) {
      const double lhs = centrifugal_term(eta, r) * r * r + 0.25;
      CHECK_THAT(lhs, Catch::Matchers::WithinRel(eta * eta, 1e-13) ||
                          Catch::Matchers::WithinAbs(eta * eta, 1e-13));
    }
  }
}

TEST_CASE("lift_wavefunction cancels the r^{(N-1)/2} shape") {
  // N = 2: R = sqrt(r) lifts to psi = 1
  const GridFunction r_half =
      GridFunction::sample(0.1, 0.05, 200, [](double r) { return std::sqrt(r); });
  const GridFunction psi2 = lift_wavefunction(r_half, 2);
  for (std::size_t i = 0; i < psi2.size(); ++i)
    CHECK_THAT(psi2.values[i], Catch::Matchers::WithinRel(1.0, 1e-14));

  // N = 3: R = r lifts to psi = 1
  const GridFunction r_lin = GridFunction::sample(0.1, 0.05, 200, [](double r) { return r; });
  const GridFunction psi3 = lift_wavefunction(r_lin, 3);
  for (std::size_t i = 0; i < psi3.size(); ++i)
    CHECK_THAT(psi3.values[i], Catch::Matchers::WithinRel(1.0, 1e-14));
}

TEST_CASE("lift of the worked-example ground state is its polynomial factor") {
  // kappa = 1/2 for m = 0, so psi = r^{-1/2} R00 has the pure exponential
  // shape exp(alpha r^2/2 - beta r^4/4 + tau r^6/6).
  const ExactSolution sol = solve_constraints(1.0, -2.0, 4.0, 0.0);
  const RadialWavefunction R = build_wavefunction(sol);
  const GridFunction sampled = GridFunction::sample(1e-3, 1e-3, 2000, std::cref(R));
  const GridFunction psi = lift_wavefunction(sampled, 2);
  for (std::size_t i = 0; i < psi.size(); i += 37) {
    const double expected = std::exp(R.polynomial_part(psi.r(i)));
    CHECK_THAT(psi.values[i], Catch::Matchers::WithinRel(expected, 1e-12));
  }
}

TEST_CASE("round trip: lift then multiply back recovers R") {
  std::mt19937 rng(991);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  for (int n_dim = 2; n_dim <= 12; n_dim += 3) {
    const GridFunction R =
        GridFunction::sample(0.05, 0.01, 300, [&](double) { return val(rng); });
    const GridFunction psi = lift_wavefunction(R, n_dim);
    const double back_exp = 0.5 * (n_dim - 1);
    for (std::size_t i = 0; i < R.size(); ++i) {
      const double back = psi.values[i] * std::pow(R.r(i), back_exp);
      if (R.values[i] != 0.0)
        CHECK_THAT(back, Catch::Matchers::WithinRel(R.values[i], 1e-14));
    }
  }
}

TEST_CASE("kappa = eta + 1/2 solves kappa(kappa-1) = eta^2 - 1/4 over all channels") {
  for (int n_dim = 2; n_dim <= 12; ++n_dim) {
    for (int ell = 0; ell <= 10; ++ell) {
      const double eta = reduce(n_dim, ell).eta;
      const double kappa = eta + 0.5;
      CHECK_THAT(kappa * (kappa - 1.0),
                 Catch::Matchers::WithinAbs(eta * eta - 0.25, 1e-13));
    }
  }
}

TEST_CASE("grid construction rejects degenerate inputs") {
  CHECK_THROWS_AS(GridFunction(0.0, 0.1, {1.0, 2.0, 3.0}), domain_error);
  CHECK_THROWS_AS(GridFunction(0.1, 0.0, {1.0, 2.0, 3.0}), domain_error);
  CHECK_THROWS_AS(GridFunction(0.1, 0.1, {1.0, 2.0}), domain_error);
  CHECK_THROWS_AS(GridFunction(0.1, 0.1, {1.0, 2.0, std::nan("")}), domain_error);
}
