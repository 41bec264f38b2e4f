// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include <doctest.h>

#include <vector>

#include "gptcone/cones.hpp"
#include "gptcone/errors.hpp"
#include "gptcone/rng.hpp"
#include "gptcone/vectorize.hpp"

using namespace gptcone;

namespace {

Mat cols(std::initializer_list<std::initializer_list<double>> data) {
  const int m = static_cast<int>(data.size());
  const int d = static_cast<int>(data.begin()->size());
  Mat out(d, m);
  int j = 0;
  for (const auto& col : data) {
    int i = 0;
    for (double x : col) out(i++, j) = x;
    ++j;
  }
  return out;
}

Vec vec(std::initializer_list<double> data) {
  Vec v(static_cast<int>(data.size()));
  int i = 0;
  for (double x : data) v[i++] = x;
  return v;
}

ConeSpec square_gbit_state_cone() {
  return ConeSpec::polyhedral_v(
      cols({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}));
}

std::vector<ConeSpec> all_kinds() {
  return {ConeSpec::orthant(5), ConeSpec::psd_real(3), ConeSpec::psd_complex(2),
          ConeSpec::polyhedral_v(cols({{1, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                       {1, -1, -1}})),
          ConeSpec::polyhedral_h(
              Mat(cols({{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}})
                      .transpose())),
          ConeSpec::product({ConeSpec::orthant(2), ConeSpec::psd_complex(2)}),
          ConeSpec::free(3), ConeSpec::zero(2)};
}

}  // namespace

TEST_CASE("membership basics") {
  CHECK(contains(ConeSpec::orthant(2), vec({1, 0}), 1e-8));
  // diag(1, -0.5) has a negative eigenvalue
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -0.5;
  CHECK_FALSE(contains(ConeSpec::psd_complex(2), herm_vec(m), 1e-8));
  // (2,1) = 1*(1,0) + 1*(1,1), found by the NNLS projection oracle
  CHECK(contains(ConeSpec::polyhedral_v(cols({{1, 0}, {1, 1}})), vec({2, 1}),
                 1e-8));
  CHECK_THROWS_AS(contains(ConeSpec::orthant(3), vec({1, 2}), 1e-8),
                  ContractViolation);
}

TEST_CASE("projection pinned examples") {
  CHECK((project(ConeSpec::orthant(3), vec({1, -2, 0})) - vec({1, 0, 0}))
            .norm() < 1e-14);
  // eigendecompose [[0,1],[1,0]], clip the -1 eigenvalue, reassemble
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  Mat expect(2, 2);
  expect << 0.5, 0.5, 0.5, 0.5;
  CHECK((sym_mat(project(ConeSpec::psd_real(2), sym_vec(m))) - expect).norm() <
        1e-12);
}

TEST_CASE("projection is idempotent and nonexpansive on random vectors") {
  for (const auto& cone : all_kinds()) {
    Rng rng(101);
    for (int t = 0; t < 1000; ++t) {
      const Vec v = 3.0 * rng.gaussian_vector(cone.ambient_dim());
      const Vec w = 3.0 * rng.gaussian_vector(cone.ambient_dim());
      const Vec pv = project(cone, v);
      CHECK((project(cone, pv) - pv).norm() <= 1e-7 * (1.0 + pv.norm()));
      CHECK((pv - project(cone, w)).norm() <= (v - w).norm() + 1e-9);
    }
  }
}

TEST_CASE("point already in the cone is fixed") {
  for (const auto& cone : all_kinds()) {
    if (cone.kind() == ConeKind::kZero) continue;
    Rng rng(5);
    const Vec inside = sample_point(cone, rng);
    CHECK((project(cone, inside) - inside).norm() <=
          1e-7 * (1.0 + inside.norm()));
  }
}

TEST_CASE("dual cone kinds and membership") {
  CHECK(dual_cone(ConeSpec::orthant(4)) == ConeSpec::orthant(4));
  CHECK(dual_cone(ConeSpec::psd_complex(3)) == ConeSpec::psd_complex(3));

  const ConeSpec q = ConeSpec::polyhedral_v(cols({{1, 0}, {0, 1}}));
  const ConeSpec qd = dual_cone(q);
  CHECK(qd.kind() == ConeKind::kPolyhedralH);
  CHECK(contains(qd, vec({1, 1}), 1e-8));
  CHECK_FALSE(contains(qd, vec({-1, 1}), 1e-8));

  CHECK(dual_cone(ConeSpec::free(3)) == ConeSpec::zero(3));
  CHECK(dual_cone(ConeSpec::zero(3)) == ConeSpec::free(3));
}

TEST_CASE("self-duality of orthant and PSD kinds on samples") {
  for (const auto& cone :
       {ConeSpec::orthant(6), ConeSpec::psd_real(3), ConeSpec::psd_complex(3)}) {
    const ConeSpec dual = dual_cone(cone);
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
      const Vec v = rng.gaussian_vector(cone.ambient_dim());
      CHECK(contains(dual, v, 1e-8) == contains(cone, v, 1e-8));
    }
  }
}

TEST_CASE("double dual contains exactly the same vectors") {
  const ConeSpec cone = square_gbit_state_cone();
  const ConeSpec dd = dual_cone(dual_cone(cone));
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const Vec v = rng.gaussian_vector(3);
    CHECK(contains(dd, v, 1e-7) == contains(cone, v, 1e-7));
  }
}

TEST_CASE("double description correctness on random small cones") {
  Rng rng(77);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int ngen = 2 + rng.below(4);
      Mat gens(dim, ngen);
      for (int j = 0; j < ngen; ++j) {
        Vec g = rng.gaussian_vector(dim);
        if (g.norm() < 1e-3) g[0] += 1.0;
        gens.col(j) = g;
      }
      const ConeSpec cone = ConeSpec::polyhedral_v(gens);
      // V-rep of the dual cone {y : G^T y >= 0} via double description
      const Mat dual_rays = extreme_rays(dual_cone(ConeSpec::polyhedral_v(
          gens)));
      for (int j = 0; j < gens.cols(); ++j)
        for (int k = 0; k < dual_rays.cols(); ++k)
          CHECK(dual_rays.col(k).dot(gens.col(j)) >= -1e-10);
      // and every dual ray is in the dual cone per membership
      const ConeSpec dual = dual_cone(cone);
      for (int k = 0; k < dual_rays.cols(); ++k)
        CHECK(contains(dual, dual_rays.col(k), 1e-8));
    }
  }
}

TEST_CASE("Moreau decomposition on self-dual kinds") {
  for (const auto& cone :
       {ConeSpec::orthant(6), ConeSpec::psd_real(3), ConeSpec::psd_complex(2)}) {
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
      const Vec v = 2.0 * rng.gaussian_vector(cone.ambient_dim());
      const Vec pk = project(cone, v);
      const Vec pdual = project(dual_cone(cone), -v);
      CHECK((v - (pk - pdual)).norm() <= 1e-8 * (1.0 + v.norm()));
      CHECK(std::abs(pk.dot(pdual)) <= 1e-8 * (1.0 + v.squaredNorm()));
    }
  }
}

TEST_CASE("interior points") {
  CHECK((interior_point(ConeSpec::orthant(3)) - vec({1, 1, 1})).norm() == 0.0);
  CHECK((interior_point(ConeSpec::psd_complex(2)) -
         herm_vec(CMat::Identity(2, 2)))
            .norm() == 0.0);
  // mean of generators
  CHECK((interior_point(ConeSpec::polyhedral_v(cols({{1, 0}, {1, 1}}))) -
         vec({1, 0.5}))
            .norm() < 1e-14);

  for (const auto& cone : all_kinds()) {
    if (cone.kind() == ConeKind::kZero) continue;
    const Vec p = interior_point(cone);
    // strict interiority: small perturbations stay inside
    const double eps = 1e-6 * (1.0 + p.norm());
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
      Vec d = rng.gaussian_vector(cone.ambient_dim());
      d *= eps / d.norm();
      const Vec q = p + d;
      CHECK((project(cone, q) - q).norm() <= 1e-7 * (1.0 + q.norm()));
    }
  }
  CHECK_THROWS_AS(interior_point(ConeSpec::zero(2)), ContractViolation);
}

TEST_CASE("analytic-center interior point for H-representation") {
  const ConeSpec h = ConeSpec::polyhedral_h(
      Mat(cols({{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}}).transpose()));
  const Vec p = interior_point(h);
  CHECK(interior_margin(h, p) > 0.1 * p.norm() / 10);
  // the square cone's analytic center sits on the symmetry axis
  CHECK(std::abs(p[1]) < 1e-8 * p[0]);
  CHECK(std::abs(p[2]) < 1e-8 * p[0]);
}

TEST_CASE("tensor composition") {
  const ConeSpec c22 =
      tensor_compose(ConeSpec::orthant(2), ConeSpec::orthant(2),
                     ComposeRule::kMin);
  CHECK(c22 == ConeSpec::orthant(4));

  const ConeSpec q4 = tensor_compose(ConeSpec::psd_complex(2),
                                     ConeSpec::psd_complex(2),
                                     ComposeRule::kQuantum);
  CHECK(q4 == ConeSpec::psd_complex(4));

  CHECK_THROWS_AS(tensor_compose(ConeSpec::psd_complex(2),
                                 ConeSpec::psd_real(2), ComposeRule::kQuantum),
                  ContractViolation);
  CHECK_THROWS_AS(tensor_compose(ConeSpec::psd_complex(2),
                                 ConeSpec::psd_complex(2), ComposeRule::kMin),
                  UnsupportedCombination);
}

TEST_CASE("product evaluation bilinearity on random product points") {
  const ConeSpec ka = square_gbit_state_cone();
  const ConeSpec kb = ConeSpec::orthant(3);
  const ConeSpec kab = tensor_compose(ka, kb, ComposeRule::kMin);
  const ConeSpec ea = dual_cone(ka);
  const ConeSpec eb = dual_cone(kb);
  const ConeSpec eab = tensor_compose(ea, eb, ComposeRule::kMax);
  Rng rng(55);
  for (int t = 0; t < 200; ++t) {
    const Vec s = sample_point(ka, rng);
    const Vec u = sample_point(kb, rng);
    const Vec e = sample_point(ea, rng);
    const Vec f = sample_point(eb, rng);
    const Vec st = tensor_vector(ka, kb, kab, s, u);
    const Vec ef = tensor_vector(ea, eb, eab, e, f);
    CHECK(std::abs(ef.dot(st) - e.dot(s) * f.dot(u)) <=
          1e-10 * (1.0 + std::abs(e.dot(s) * f.dot(u))));
  }
}

TEST_CASE("gbit max composite strictly exceeds the min composite") {
  const ConeSpec k = square_gbit_state_cone();
  const ConeSpec kmin = tensor_compose(k, k, ComposeRule::kMin);
  const ConeSpec kmax = tensor_compose(k, k, ComposeRule::kMax);
  // PR-box style correlations: all four CHSH terms +1 except the (2,2) one
  Vec w = Vec::Zero(9);
  w[0] = 1.0;                     // normalization component
  w[4] = 1.0;                     // E_11
  w[5] = 1.0;                     // E_12
  w[7] = 1.0;                     // E_21
  w[8] = -1.0;                    // E_22
  CHECK(contains(kmax, w, 1e-8));
  CHECK_FALSE(contains(kmin, w, 1e-6));
}

TEST_CASE("double description scale limit is a hard error") {
  Mat big = Mat::Identity(12, 12);
  CHECK_THROWS_AS(dual_cone(ConeSpec::polyhedral_v(big)), UnsupportedScale);
}
