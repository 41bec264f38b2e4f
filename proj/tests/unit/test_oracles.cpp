// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "gptcone/errors.hpp"
#include "gptcone/oracles.hpp"
#include "gptcone/rng.hpp"
#include "gptcone/vectorize.hpp"

using namespace gptcone;

namespace {

CMat random_density(Rng& rng, int d) {
  const CMat g = rng.gaussian_complex_matrix(d, d);
  CMat w = g * g.adjoint();
  return w / w.trace().real();
}

Vec gbit(double x, double y) {
  Vec v(3);
  v << 1, x, y;
  return v;
}

}  // namespace

TEST_CASE("helstrom closed form") {
  CMat rho0 = CMat::Zero(2, 2), rho1(2, 2);
  rho0(0, 0) = 1.0;

  CHECK(helstrom(rho0, rho0).value == doctest::Approx(0.5));

  CMat rho_orth = CMat::Zero(2, 2);
  rho_orth(1, 1) = 1.0;
  CHECK(helstrom(rho0, rho_orth).value == doctest::Approx(1.0));

  rho1 << 0.5, 0.5, 0.5, 0.5;  // |+><+|, trace distance sqrt(2)/2
  CHECK(helstrom(rho0, rho1).value ==
        doctest::Approx(0.5 + std::sqrt(2.0) / 4.0).epsilon(1e-14));

  Rng rng(1);
  CHECK_THROWS_AS(helstrom(rho0, random_density(rng, 3)), ContractViolation);
}

TEST_CASE("helstrom witness achieves the claimed value") {
  Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    const CMat rho0 = random_density(rng, 2 + rng.below(2));
    const CMat rho1 = random_density(rng, static_cast<int>(rho0.rows()));
    const OracleResult res = helstrom(rho0, rho1);
    const double achieved = 0.5 * (res.witness[0].dot(herm_vec(rho0)) +
                                   res.witness[1].dot(herm_vec(rho1)));
    CHECK(std::abs(achieved - res.value) <= 1e-10);
  }
}

TEST_CASE("vertex enumeration on the classical Bob program") {
  // two orthogonal classical states, n = 2: perfectly distinguishable
  const int d = 2, n = 2;
  Mat phi(d, d * n);
  phi << Mat::Identity(d, d), Mat::Identity(d, d);
  Vec c(d * n);
  c << 0.5, 0.0, 0.0, 0.5;  // rho^1 = e1, rho^2 = e2, objective (1/2) sum
  const ConeProgram p(phi, Vec::Ones(d), c, ConeSpec::orthant(d * n),
                      Sense::kSup);
  CHECK(lp_vertex_enumeration(p).value == doctest::Approx(1.0));
}

TEST_CASE("vertex enumeration scale cap") {
  Mat phi = Mat::Zero(1, 9);
  CHECK_THROWS_AS(lp_vertex_enumeration(ConeProgram(
                      phi, Vec::Zero(1), Vec::Zero(9), ConeSpec::orthant(9),
                      Sense::kSup)),
                  UnsupportedScale);
}

TEST_CASE("gbit oracle pinned values") {
  // antipodal pure states are perfectly distinguishable by a sharp effect
  CHECK(exhaustive_gbit_discrimination({gbit(1, 1), gbit(-1, -1)}).value ==
        doctest::Approx(1.0));
  // identical states carry no information
  CHECK(exhaustive_gbit_discrimination({gbit(0.3, -0.2), gbit(0.3, -0.2)})
            .value == doctest::Approx(0.5));
  // vertex against the center: best effect gives (1/2)(1 + 1/2)
  CHECK(exhaustive_gbit_discrimination({gbit(1, 1), gbit(0, 0)}).value ==
        doctest::Approx(0.75));
  // three-outcome case: lower bound from sharp-pair post-processing
  const GbitOracleResult r3 = exhaustive_gbit_discrimination(
      {gbit(1, 1), gbit(-1, -1), gbit(0, 0)});
  CHECK(r3.value >= doctest::Approx(2.0 / 3.0));
}

TEST_CASE("gbit oracle witnesses are valid measurements") {
  const GbitOracleResult res =
      exhaustive_gbit_discrimination({gbit(1, 1), gbit(0.5, -0.5)});
  Vec sum = Vec::Zero(3);
  for (const auto& f : res.witness) sum += f;
  CHECK((sum - gbit(0, 0)).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sum[0] == doctest::Approx(1.0));
}
