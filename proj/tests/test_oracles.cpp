#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "octic/ansatz.hpp"
#include "octic/eigensolver.hpp"
#include "octic/normalize.hpp"
#include "octic/quadrature.hpp"
#include "octic/shooting.hpp"

using namespace octic;

namespace {

const double kPi = std::numbers::pi;

ExactSolution paper_solution() { return solve_constraints(1.0, -2.0, 4.0, 0.0); }

double paper_bare(double r) {
  static const OcticPotential v = paper_solution().potential;
  return evaluate(v, r);
}

// test-only brute-force oracle
template <typename F>
double trapezoid(const F& f, double a, double b, double h) {
  const auto n = static_cast<long>(std::floor((b - a) / h));
  double sum = 0.5 * (f(a) + f(a + n * h));
  for (long i = 1; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

}  // namespace

// ---------------------------------------------------------------- FD solver

TEST_CASE("FD: particle in a box recovers pi^2 and the discrete spectrum") {
  auto zero = [](double) { return 0.0; };
  const EigenResult res = fd_eigensolve(zero, 0.5, 0.0, 1.0, 999, 3);
  const double h = 1.0 / 1000.0;
  for (int j = 1; j <= 3; ++j) {
    const double discrete = 2.0 / (h * h) * (1.0 - std::cos(j * kPi * h));
    CHECK_THAT(res.eigenvalues[j - 1], Catch::Matchers::WithinAbs(discrete, 1e-8));
  }
  CHECK_THAT(res.eigenvalues[0], Catch::Matchers::WithinAbs(kPi * kPi, 1e-2));
  CHECK(res.eigenvalues[0] < res.eigenvalues[1]);
  CHECK(res.eigenvalues[1] < res.eigenvalues[2]);
  CHECK_THAT(res.extrapolated[0], Catch::Matchers::WithinAbs(kPi * kPi, 1e-6));
}

TEST_CASE("FD: box eigenvector is the discrete sine mode with unit norm") {
  auto zero = [](double) { return 0.0; };
  const EigenResult res = fd_eigensolve(zero, 0.5, 0.0, 1.0, 999, 1);
  REQUIRE(res.eigenvectors.size() == 1);
  const GridFunction& v = res.eigenvectors.front();
  double norm = 0.0, err = 0.0, ref = 0.0;
  const double amplitude = std::sqrt(2.0);  // unit L2 on (0,1)
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double expected = amplitude * std::sin(kPi * v.r(i));
    norm += v.values[i] * v.values[i] * v.h;
    err += (v.values[i] - expected) * (v.values[i] - expected);
    ref += expected * expected;
  }
  CHECK_THAT(norm, Catch::Matchers::WithinAbs(1.0, 1e-10));
  CHECK(std::sqrt(err / ref) < 1e-5);
}

TEST_CASE("FD: half-line harmonic oscillator gives the odd tower base E = 3") {
  auto harmonic = [](double r) { return r * r; };
  const EigenResult res = fd_eigensolve(harmonic, 0.5, 0.0, 6.0, 3000, 1, false);
  CHECK_THAT(res.eigenvalues[0], Catch::Matchers::WithinAbs(3.0, 1e-3));
  CHECK_THAT(res.extrapolated[0], Catch::Matchers::WithinAbs(3.0, 1e-6));
  CHECK(res.error_estimate[0] < 1e-5);
  CHECK(res.error_estimate[0] > 0.0);
}

TEST_CASE("FD: worked example, critical eta = 0 channel") {
  const ExactSolution sol = paper_solution();
  const EigenResult res = fd_eigensolve(paper_bare, 0.0, 0.0, 4.0, 4000, 1, false);
  CHECK_THAT(res.eigenvalues[0], Catch::Matchers::WithinAbs(0.375, 1e-3));
  CHECK_THAT(res.extrapolated[0], Catch::Matchers::WithinAbs(sol.energy, 1e-6));
  CHECK(res.scheme.h == 4.0 / 4001.0);
  CHECK(res.scheme.stencil_order == 2);
}

TEST_CASE("FD: eta = 1 channel of the worked example") {
  const ExactSolution sol = solve_constraints(1.0, -2.0, 4.0, 1.0);
  auto bare = [&](double r) { return evaluate(sol.potential, r); };
  const EigenResult res = fd_eigensolve(bare, 1.0, 0.0, 4.0, 4000, 1, false);
  CHECK_THAT(res.eigenvalues[0], Catch::Matchers::WithinAbs(0.75, 1e-4));
  CHECK_THAT(res.extrapolated[0], Catch::Matchers::WithinAbs(0.75, 1e-6));
}

TEST_CASE("FD: argument validation") {
  auto zero = [](double) { return 0.0; };
  CHECK_THROWS_AS(fd_eigensolve(zero, 0.5, 0.0, 1.0, 30, 1), domain_error);
  CHECK_THROWS_AS(fd_eigensolve(zero, 0.5, 0.0, 1.0, 100, 99), domain_error);
  CHECK_THROWS_AS(fd_eigensolve(zero, 0.5, 0.0, 1.0, 100, 0), domain_error);
  CHECK_THROWS_AS(fd_eigensolve(zero, 0.5, 1.0, 0.5, 100, 1), domain_error);
  CHECK_THROWS_AS(fd_eigensolve(zero, 0.5, -0.5, 1.0, 100, 1), domain_error);
}

// ----------------------------------------------------------------- shooting

TEST_CASE("shoot: particle in a box") {
  auto zero = [](double) { return 0.0; };
  ShootOptions opt;
  opt.r_min = 0.0;
  opt.r_max = 1.0;
  opt.steps = 2000;
  const double e1 = shoot(zero, 0.5, {5.0, 15.0}, 0, opt);
  CHECK_THAT(e1, Catch::Matchers::WithinAbs(kPi * kPi, 1e-8));
}

TEST_CASE("shoot: box first excited state via node targeting") {
  auto zero = [](double) { return 0.0; };
  ShootOptions opt;
  opt.r_min = 0.0;
  opt.r_max = 1.0;
  opt.steps = 2000;
  const double e2 = shoot(zero, 0.5, {35.0, 45.0}, 1, opt);
  CHECK_THAT(e2, Catch::Matchers::WithinAbs(4.0 * kPi * kPi, 1e-7));
  CHECK_THROWS_WITH(shoot(zero, 0.5, {35.0, 45.0}, 0, opt),
                    Catch::Matchers::ContainsSubstring("node-count mismatch") &&
                        Catch::Matchers::ContainsSubstring("found 1"));
}

TEST_CASE("shoot: worked example ground state") {
  ShootOptions opt;
  opt.r_min = 1e-3;
  opt.r_max = 4.0;
  opt.steps = 4000;
  const double e = shoot(paper_bare, 0.0, {0.0, 1.0}, 0, opt);
  CHECK_THAT(e, Catch::Matchers::WithinAbs(0.375, 1e-6));
}

TEST_CASE("shoot: harmonic half-line state") {
  auto harmonic = [](double r) { return r * r; };
  ShootOptions opt;
  opt.r_min = 0.0;
  opt.r_max = 6.0;
  opt.steps = 3000;
  const double e = shoot(harmonic, 0.5, {2.0, 4.0}, 0, opt);
  CHECK_THAT(e, Catch::Matchers::WithinAbs(3.0, 1e-6));
}

TEST_CASE("shoot: bracket without a sign change is rejected with both defects") {
  auto zero = [](double) { return 0.0; };
  ShootOptions opt;
  opt.r_min = 0.0;
  opt.r_max = 1.0;
  opt.steps = 500;
  CHECK_THROWS_WITH(shoot(zero, 0.5, {0.5, 5.0}, 0, opt),
                    Catch::Matchers::ContainsSubstring("does not straddle") &&
                        Catch::Matchers::ContainsSubstring("defect("));
}

// --------------------------------------------------------------- quadrature

TEST_CASE("GK15: single panel is exact through the Gauss degree") {
  for (int k = 0; k <= 13; ++k) {
    auto mono = [k](double x) { return std::pow(x, k); };
    const QuadratureResult q = adaptive_gauss_kronrod(mono, 0.0, 1.0, 1e300, 1, 0);
    CHECK_THAT(q.integral, Catch::Matchers::WithinRel(1.0 / (k + 1), 1e-14));
    CHECK(q.abs_error_estimate < 1e-14);
    CHECK(q.panels == 1);
  }
}

TEST_CASE("GK15 adaptive: stretched exponential against the Gamma identity") {
  auto f = [](double r) { return std::exp(-std::pow(r, 6)); };
  const QuadratureResult q = adaptive_gauss_kronrod(f, 0.0, 3.7, 1e-13, 8);
  CHECK_THAT(q.integral, Catch::Matchers::WithinRel(std::tgamma(7.0 / 6.0), 1e-12));
  CHECK(q.panels > 8);
}

// ---------------------------------------------------------------- normalize

TEST_CASE("normalize: Gamma-function sanity case") {
  ExactSolution sol;
  sol.params = AnsatzParams{0.0, 0.0, -3.0, 0.0};
  sol.eta = 0.5;  // unused by normalize
  const NormalizationResult norm = normalize(sol);
  CHECK_THAT(norm.omega, Catch::Matchers::WithinRel(std::tgamma(7.0 / 6.0), 1e-9));
  CHECK(norm.n0 == 1.0 / std::sqrt(norm.omega));
  CHECK(std::fabs(norm.n0 * norm.n0 * norm.omega - 1.0) <= 4e-16);
}

TEST_CASE("normalize: worked example golden values") {
  const NormalizationResult norm = normalize(paper_solution());
  CHECK_THAT(norm.omega, Catch::Matchers::WithinRel(0.4144630304445332, 1e-9));
  CHECK_THAT(norm.n0, Catch::Matchers::WithinRel(1.553306290167845, 1e-9));
  CHECK(norm.truncation_radius > 2.0);
  CHECK(norm.abs_error_estimate < 1e-8);
}

TEST_CASE("normalize agrees with the brute-force trapezoid oracle") {
  const ExactSolution sol = paper_solution();
  const RadialWavefunction R = build_wavefunction(sol);
  auto squared = [&](double r) {
    const double v = R(r);
    return v * v;
  };
  const double coarse = trapezoid(squared, 1e-8, 4.0, 1e-5);
  const double fine = trapezoid(squared, 1e-8, 4.0, 5e-6);
  CHECK(std::fabs(fine - coarse) < 1e-10);  // oracle self-check (Richardson)
  const NormalizationResult norm = normalize(sol);
  CHECK_THAT(norm.omega, Catch::Matchers::WithinRel(coarse, 1e-8));
}

TEST_CASE("normalize is stable under halving the initial panel count") {
  NormalizeOptions coarse;
  coarse.initial_panels = 4;
  NormalizeOptions fine;
  fine.initial_panels = 8;
  const double w4 = normalize(paper_solution(), coarse).omega;
  const double w8 = normalize(paper_solution(), fine).omega;
  CHECK(std::fabs(w4 - w8) <= 1e-9 * w8);
}

TEST_CASE("normalize rejects non-normalizable parameters") {
  ExactSolution tail;
  tail.params = AnsatzParams{-2.0, 0.0, 0.0, 0.5};  // tau = 0: no decay
  CHECK_THROWS_WITH(normalize(tail), Catch::Matchers::ContainsSubstring("tau"));
  ExactSolution origin;
  origin.params = AnsatzParams{0.0, 0.0, -1.0, -0.5};  // kappa = -1/2
  CHECK_THROWS_WITH(normalize(origin), Catch::Matchers::ContainsSubstring("kappa"));
}
