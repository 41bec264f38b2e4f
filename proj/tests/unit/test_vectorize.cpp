// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include "gptcone/errors.hpp"
#include "gptcone/rng.hpp"
#include "gptcone/vectorize.hpp"

using namespace gptcone;

namespace {

CMat random_hermitian(Rng& rng, int n) {
  const CMat g = rng.gaussian_complex_matrix(n, n);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("hermitian vectorization is a trace-inner-product isometry") {
  Rng rng(42);
  for (int n : {1, 2, 3, 4, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CMat a = random_hermitian(rng, n);
      const CMat b = random_hermitian(rng, n);
      const double dot = herm_vec(a).dot(herm_vec(b));
      const double tr = (a * b).trace().real();
      CHECK(dot == doctest::Approx(tr).epsilon(1e-12));
      CHECK((herm_mat(herm_vec(a)) - a).norm() < 1e-12);
    }
  }
}

TEST_CASE("symmetric vectorization is a trace-inner-product isometry") {
  Rng rng(7);
  for (int n : {1, 2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat a(n, n), b(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a(i, j) = rng.gaussian();
          b(i, j) = rng.gaussian();
        }
      a = Mat(0.5 * (a + a.transpose()));
      b = Mat(0.5 * (b + b.transpose()));
      CHECK(sym_vec(a).dot(sym_vec(b)) ==
            doctest::Approx((a * b).trace()).epsilon(1e-12));
      CHECK((sym_mat(sym_vec(a)) - a).norm() < 1e-12);
    }
  }
}

TEST_CASE("identity vectorizes onto the leading diagonal coordinate") {
  const Vec v = herm_vec(CMat::Identity(3, 3));
  CHECK(v[0] == doctest::Approx(std::sqrt(3.0)));
  for (int i = 1; i < v.size(); ++i) CHECK(v[i] == doctest::Approx(0.0));
}

TEST_CASE("partial trace") {
  Rng rng(3);
  const CMat a = random_hermitian(rng, 2);
  const CMat b = random_hermitian(rng, 3);
  const CMat ab = kron(a, b);
  CHECK((partial_trace(ab, 2, 3, true) - b * a.trace()).norm() < 1e-12);
  CHECK((partial_trace(ab, 2, 3, false) - a * b.trace()).norm() < 1e-12);
}

TEST_CASE("ambient dimension decoding rejects bad sizes") {
  CHECK(herm_mat_dim(9) == 3);
  CHECK(sym_mat_dim(6) == 3);
  CHECK_THROWS_AS(herm_mat_dim(8), ContractViolation);
  CHECK_THROWS_AS(sym_mat_dim(7), ContractViolation);
}
