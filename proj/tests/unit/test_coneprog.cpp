// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "gptcone/coneprog.hpp"
#include "gptcone/errors.hpp"
#include "gptcone/oracles.hpp"
#include "gptcone/rng.hpp"
#include "gptcone/vectorize.hpp"

using namespace gptcone;

namespace {

ConeProgram tiny_lp() {
  // sup { x1 : x1 + x2 = 1, x in Orthant(2) }, optimum 1 at (1, 0)
  Mat phi(1, 2);
  phi << 1, 1;
  Vec b(1), c(2);
  b << 1;
  c << 1, 0;
  return ConeProgram(phi, b, c, ConeSpec::orthant(2), Sense::kSup);
}

// Bounded feasible random LP: b = A x0 for a nonnegative x0, plus a
// sum-of-coordinates row so the feasible set lives in a simplex slab.
ConeProgram random_bounded_lp(Rng& rng) {
  const int n = 3 + rng.below(4);
  const int m = 1 + rng.below(3);
  Mat phi(m + 1, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) phi(i, j) = rng.gaussian();
  phi.row(m).setOnes();
  const Vec x0 = rng.gaussian_vector(n).cwiseAbs();
  const Vec b = phi * x0;
  const Vec c = rng.gaussian_vector(n);
  return ConeProgram(phi, b, c, ConeSpec::orthant(n),
                     rng.uniform() < 0.5 ? Sense::kSup : Sense::kInf);
}

}  // namespace

TEST_CASE("pinned LP solves and dualizes to value 1") {
  const ConeProgram p = tiny_lp();
  const ConeSolution sol = solve(p, 1e-9, 200000);
  CHECK(sol.status == SolveStatus::kOptimal);
  CHECK(sol.primal_value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sol.dual_value == doctest::Approx(1.0).epsilon(1e-6));

  // dual: inf { y : y >= 1, y >= 0 }, optimum 1
  const ConeProgram d = dualize(p);
  CHECK(d.sense == Sense::kInf);
  const ConeSolution dsol = solve(d, 1e-9, 200000);
  CHECK(dsol.status == SolveStatus::kOptimal);
  CHECK(dsol.primal_value == doctest::Approx(1.0).epsilon(1e-6));

  // vertex-enumeration oracle agrees
  const OracleResult oracle = lp_vertex_enumeration(p);
  CHECK(oracle.value == doctest::Approx(1.0));
  CHECK(oracle.witness[0][0] == doctest::Approx(1.0));
  CHECK(oracle.witness[0][1] == doctest::Approx(0.0));
}

TEST_CASE("objective pinned by constraint") {
  Mat phi(1, 2);
  phi << 1, 1;
  Vec b(1), c(2);
  b << 1;
  c << 1, 1;
  const ConeSolution sol =
      solve(ConeProgram(phi, b, c, ConeSpec::orthant(2), Sense::kSup));
  CHECK(sol.status == SolveStatus::kOptimal);
  CHECK(sol.primal_value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("zero program dualizes to value zero") {
  Mat phi = Mat::Zero(2, 3);
  const ConeProgram p(phi, Vec::Zero(2), Vec::Zero(3), ConeSpec::orthant(3),
                      Sense::kSup);
  const ConeSolution dsol = solve(dualize(p), 1e-9, 100000);
  CHECK(dsol.status == SolveStatus::kOptimal);
  CHECK(dsol.primal_value == doctest::Approx(0.0));
}

TEST_CASE("double dualization preserves the optimal value") {
  Rng rng(711);
  for (int trial = 0; trial < 10; ++trial) {
    const ConeProgram p = random_bounded_lp(rng);
    const ConeSolution s0 = solve(p, 1e-8, 200000);
    const ConeSolution s2 = solve(dualize(dualize(p)), 1e-8, 200000);
    REQUIRE(s0.status == SolveStatus::kOptimal);
    REQUIRE(s2.status == SolveStatus::kOptimal);
    CHECK(s2.primal_value ==
          doctest::Approx(s0.primal_value).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("solver matches vertex enumeration on 100 random small LPs") {
  Rng rng(2024);
  int solved = 0;
  while (solved < 100) {
    const ConeProgram p = random_bounded_lp(rng);
    const OracleResult oracle = lp_vertex_enumeration(p);
    REQUIRE(std::isfinite(oracle.value));
    const ConeSolution sol = solve(p, 1e-9, 200000);
    REQUIRE(sol.status == SolveStatus::kOptimal);
    CHECK(std::abs(sol.primal_value - oracle.value) <=
          1e-6 * (1.0 + std::abs(oracle.value)));
    // weak duality and complementary slackness at optimality
    const double slack = 1e-6 * (1.0 + std::abs(sol.primal_value));
    if (p.sense == Sense::kSup)
      CHECK(sol.primal_value <= sol.dual_value + slack);
    else
      CHECK(sol.primal_value >= sol.dual_value - slack);
    CHECK(std::abs(sol.s.dot(sol.x)) <= 1e-5 * (1.0 + sol.x.norm()));
    ++solved;
  }
}

TEST_CASE("Helstrom instance through the conic solver") {
  // Bob's discrimination program for rho0 = |0><0|, rho1 = |+><+|
  CMat rho0 = CMat::Zero(2, 2), rho1(2, 2);
  rho0(0, 0) = 1.0;
  rho1 << 0.5, 0.5, 0.5, 0.5;
  const Vec v0 = herm_vec(rho0), v1 = herm_vec(rho1);

  Mat phi(4, 8);
  phi << Mat::Identity(4, 4), Mat::Identity(4, 4);
  Vec c(8);
  c << v0 / 2, v1 / 2;
  const ConeProgram p(
      phi, herm_vec(CMat::Identity(2, 2)), c,
      ConeSpec::product({ConeSpec::psd_complex(2), ConeSpec::psd_complex(2)}),
      Sense::kSup);

  const ConeSolution sol = solve(p, 1e-9, 200000);
  REQUIRE(sol.status == SolveStatus::kOptimal);
  const double expected = 0.5 + std::sqrt(2.0) / 4.0;
  CHECK(sol.primal_value == doctest::Approx(expected).epsilon(1e-6));
  CHECK(helstrom(rho0, rho1).value == doctest::Approx(expected).epsilon(1e-12));

  // Slater: the uniform measurement M^j = U/2 is strictly interior
  const auto slater = check_slater(p);
  REQUIRE(slater.has_value());
  CHECK((slater->head(4) - herm_vec(CMat::Identity(2, 2)) / 2).norm() < 1e-9);
  CHECK((slater->tail(4) - herm_vec(CMat::Identity(2, 2)) / 2).norm() < 1e-9);
}

TEST_CASE("identical-states program has value 1/n") {
  CMat rho(2, 2);
  rho << 0.7, 0.1, 0.1, 0.3;
  const Vec v = herm_vec(rho);
  const int n = 3;
  Mat phi(4, 4 * n);
  for (int j = 0; j < n; ++j) phi.block(0, 4 * j, 4, 4) = Mat::Identity(4, 4);
  Vec c(4 * n);
  for (int j = 0; j < n; ++j) c.segment(4 * j, 4) = v / n;
  const ConeProgram p(
      phi, herm_vec(CMat::Identity(2, 2)), c,
      ConeSpec::product(std::vector<ConeSpec>(n, ConeSpec::psd_complex(2))),
      Sense::kSup);
  const ConeSolution sol = solve(p, 1e-9, 200000);
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(sol.primal_value == doctest::Approx(1.0 / n).epsilon(1e-6));
}

TEST_CASE("check_slater edge cases") {
  // empty feasible set: phi = 0, b != 0
  Mat phi = Mat::Zero(1, 2);
  Vec b(1);
  b << 1;
  CHECK_FALSE(
      check_slater(ConeProgram(phi, b, Vec::Zero(2), ConeSpec::orthant(2),
                               Sense::kSup))
          .has_value());

  // single vertex: x1 + x2 = 0 over the orthant
  Mat phi2(1, 2);
  phi2 << 1, 1;
  CHECK_FALSE(check_slater(ConeProgram(phi2, Vec::Zero(1), Vec::Zero(2),
                                       ConeSpec::orthant(2), Sense::kSup))
                  .has_value());

  // full-dimensional feasible set
  CHECK(check_slater(tiny_lp()).has_value());
}

TEST_CASE("iteration cap returns best iterate, never silently wrong") {
  SolveOptions opts;
  opts.tol = 1e-30;
  opts.max_iter = 60;
  const ConeSolution sol = solve(tiny_lp(), opts);
  CHECK(sol.status == SolveStatus::kMaxIterations);
  CHECK(sol.iterations == 60);
  CHECK(std::isfinite(sol.residuals.primal));
}

TEST_CASE("infeasibility detection") {
  // affine-inconsistent: 0 x = 1
  {
    Mat phi = Mat::Zero(1, 2);
    Vec b(1);
    b << 1;
    const ConeSolution sol = solve(
        ConeProgram(phi, b, Vec::Zero(2), ConeSpec::orthant(2), Sense::kSup));
    CHECK(sol.status == SolveStatus::kInfeasibleDetected);
  }
  // cone-infeasible: x1 + x2 = -1 over the orthant
  {
    Mat phi(1, 2);
    phi << 1, 1;
    Vec b(1);
    b << -1;
    const ConeSolution sol = solve(
        ConeProgram(phi, b, Vec::Ones(2), ConeSpec::orthant(2), Sense::kSup));
    CHECK(sol.status == SolveStatus::kInfeasibleDetected);
  }
}

TEST_CASE("shape validation") {
  Mat phi(1, 2);
  phi << 1, 1;
  CHECK_THROWS_AS(
      ConeProgram(phi, Vec::Zero(2), Vec::Zero(2), ConeSpec::orthant(2),
                  Sense::kSup),
      ContractViolation);
  CHECK_THROWS_AS(
      ConeProgram(phi, Vec::Zero(1), Vec::Zero(3), ConeSpec::orthant(2),
                  Sense::kSup),
      ContractViolation);
}
