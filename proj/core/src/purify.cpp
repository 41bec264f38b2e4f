// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/purify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "gptcone/errors.hpp"
#include "gptcone/vectorize.hpp"

namespace gptcone {

namespace {

// -- deterministic eigendecompositions --------------------------------------

template <typename Scalar>
void canonicalize_phase(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& col) {
  int arg = 0;
  double best = 0.0;
  for (int i = 0; i < col.size(); ++i) {
    const double a = std::abs(col[i]);
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  if (best < 1e-300) return;
  const Scalar phase = col[arg] / Scalar(best);
  col /= phase;
}

template <typename Sc>
bool lex_less(const Eigen::Matrix<Sc, Eigen::Dynamic, 1>& a,
              const Eigen::Matrix<Sc, Eigen::Dynamic, 1>& b) {
  for (int i = 0; i < a.size(); ++i) {
    const double ar = std::real(a[i]), br = std::real(b[i]);
    if (ar != br) return ar < br;
    const double ai = std::imag(a[i]), bi = std::imag(b[i]);
    if (ai != bi) return ai < bi;
  }
  return false;
}

// Eigenvalues in descending order; eigenvector columns phase-canonical,
// with exact ties broken by lexicographic comparison of the entries so
// degenerate spectra still yield a deterministic result.
template <typename MatT>
std::pair<Vec, MatT> sorted_eig(const MatT& m) {
  using ColT = Eigen::Matrix<typename MatT::Scalar, Eigen::Dynamic, 1>;
  Eigen::SelfAdjointEigenSolver<MatT> es(m);
  const int n = static_cast<int>(m.rows());
  MatT vecs = es.eigenvectors();
  std::vector<ColT> cols;
  for (int i = 0; i < n; ++i) {
    ColT c = vecs.col(i);
    canonicalize_phase(c);
    cols.push_back(std::move(c));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Vec ev = es.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (ev[i] != ev[j]) return ev[i] > ev[j];
    return lex_less(cols[i], cols[j]);
  });
  Vec lam(n);
  MatT out(n, n);
  for (int i = 0; i < n; ++i) {
    lam[i] = ev[order[i]];
    out.col(i) = cols[order[i]];
  }
  return {lam, out};
}

// -- kind dispatch -----------------------------------------------------------

struct ComplexKind {
  using M = CMat;
  using V = CVec;
  static M mat(const Vec& v) { return herm_mat(v); }
  static Vec vec(const M& m) { return herm_vec(m); }
  static GptSystem ancilla(int d) { return quantum_system(d); }
};

struct RealKind {
  using M = Mat;
  using V = Vec;
  static M mat(const Vec& v) { return sym_mat(v); }
  static Vec vec(const M& m) { return sym_vec(m); }
  static GptSystem ancilla(int d) { return real_quantum_system(d); }
};

bool is_complex_kind(const GptSystem& sys) {
  switch (sys.state_cone().kind()) {
    case ConeKind::kPsdComplex: return true;
    case ConeKind::kPsdReal: return false;
    default:
      throw UnsupportedTheory(
          "purify: the construction is only realized for quantum and "
          "real-quantum systems ('" + sys.label() + "')");
  }
}

template <typename K>
Purification purify_impl(const GptState& rho, int ancilla_dim) {
  using M = typename K::M;
  const M r = K::mat(rho.vec);
  auto [lam, vecs] = sorted_eig(r);
  if (lam.minCoeff() < -1e-8)
    throw ContractViolation("purify: state has a negative eigenvalue");
  if (lam.sum() > 1.0 + 1e-8)
    throw ContractViolation("purify: state is not subnormalized");
  int rank = 0;
  for (int i = 0; i < lam.size(); ++i)
    if (lam[i] > kRankTol) ++rank;
  const int dc = ancilla_dim > 0 ? ancilla_dim : std::max(1, rank);
  if (dc < rank)
    throw ContractViolation("purify: ancilla dimension " + std::to_string(dc) +
                            " below rank " + std::to_string(rank));
  const int d = static_cast<int>(r.rows());
  typename K::V psi = K::V::Zero(dc * d);
  for (int i = 0; i < rank; ++i)
    psi.segment(i * d, d) = std::sqrt(std::max(0.0, lam[i])) * vecs.col(i);
  const M dens = psi * psi.adjoint();
  GptSystem comp = compose(K::ancilla(dc), rho.system, ComposeRule::kQuantum);
  GptState state{comp, K::vec(dens)};
  return Purification{std::move(state), rho, rank};
}

}  // namespace

Purification purify(const GptState& rho) { return purify(rho, 0); }

Purification purify(const GptState& rho, int ancilla_dim) {
  return is_complex_kind(rho.system)
             ? purify_impl<ComplexKind>(rho, ancilla_dim)
             : purify_impl<RealKind>(rho, ancilla_dim);
}

namespace {

template <typename K>
Vec dilate_impl(const Vec& r, const GptSystem& ab) {
  const auto& info = ab.composite();
  const int da = info.a->state_cone().matrix_dim();
  const int db = info.b->state_cone().matrix_dim();
  const typename K::M rm = K::mat(r);
  if (rm.rows() != db)
    throw ContractViolation("dilate: state dimension does not match factor B");
  auto [lam, vecs] = sorted_eig(rm);
  if (lam.size() && lam.minCoeff() < -1e-8 * std::max(1.0, lam.maxCoeff()))
    throw ContractViolation("dilate: state is outside the cone");
  int rank = 0;
  for (int i = 0; i < lam.size(); ++i)
    if (lam[i] > kRankTol) ++rank;
  if (rank > da)
    throw ContractViolation("dilate: factor A dimension " +
                            std::to_string(da) + " below rank " +
                            std::to_string(rank));
  typename K::V psi = K::V::Zero(da * db);
  for (int i = 0; i < rank; ++i)
    psi.segment(i * db, db) = std::sqrt(std::max(0.0, lam[i])) * vecs.col(i);
  return K::vec(psi * psi.adjoint());
}

}  // namespace

Vec dilate(const Vec& r, const GptSystem& composite_ab) {
  return is_complex_kind(composite_ab)
             ? dilate_impl<ComplexKind>(r, composite_ab)
             : dilate_impl<RealKind>(r, composite_ab);
}

// ---------------------------------------------------------------------------
// Uhlmann matching

namespace {

template <typename MatT>
MatT uhlmann_core(const MatT& psi1, const MatT& psi2) {
  if (psi1.rows() != psi2.rows() || psi1.cols() != psi2.cols())
    throw ContractViolation("uhlmann: purification shapes differ");
  const int dp = static_cast<int>(psi1.rows());
  const MatT n1 = psi1.adjoint() * psi1;
  const MatT n2 = psi2.adjoint() * psi2;
  if ((n1 - n2).norm() > 1e-8 * (1.0 + n1.norm()))
    throw ContractViolation(
        "uhlmann: the two purifications have different marginals");
  const MatT n = 0.5 * (n1 + n2);
  auto [mu, q] = sorted_eig(n);
  int rank = 0;
  for (int i = 0; i < mu.size(); ++i)
    if (mu[i] > kRankTol) ++rank;

  // a_i / b_i: polar isometry columns of each purification on the support
  using ColT = Eigen::Matrix<typename MatT::Scalar, Eigen::Dynamic, 1>;
  std::vector<ColT> basis_a, basis_b;
  for (int i = 0; i < rank; ++i) {
    const double inv = 1.0 / std::sqrt(mu[i]);
    basis_a.push_back(ColT(psi1 * q.col(i) * inv));
    basis_b.push_back(ColT(psi2 * q.col(i) * inv));
  }

  // complete both to orthonormal bases, canonical directions first
  const auto complete = [dp](std::vector<ColT>& basis) {
    for (int k = 0; k < dp && static_cast<int>(basis.size()) < dp; ++k) {
      ColT w = ColT::Zero(dp);
      w[k] = 1.0;
      for (const auto& v : basis) w -= v * v.dot(w);
      const double nrm = w.norm();
      if (nrm > 1e-6) basis.push_back(ColT(w / nrm));
    }
    if (static_cast<int>(basis.size()) != dp)
      throw NumericalFailure("uhlmann: orthonormal completion failed",
                             static_cast<double>(dp - basis.size()));
  };
  complete(basis_a);
  complete(basis_b);

  MatT w = MatT::Zero(dp, dp);
  for (int i = 0; i < dp; ++i) w += basis_b[i] * basis_a[i].adjoint();
  return w;
}

template <typename K>
typename K::V pure_vector(const typename K::M& dens) {
  auto [lam, vecs] = sorted_eig(dens);
  const double top = lam[0];
  double rest = 0.0;
  for (int i = 1; i < lam.size(); ++i) rest += std::abs(lam[i]);
  if (top <= 0 || rest > 1e-8 * std::max(1.0, top))
    throw ContractViolation("pure_vector: state is not rank-one");
  return std::sqrt(top) * vecs.col(0);
}

struct SteeringDims {
  int dc, da, db;
  bool complex_kind;
};

SteeringDims steering_dims(const Purification& global) {
  const auto& outer = global.state.system.composite();
  const GptSystem& c_sys = *outer.a;
  const GptSystem& ab_sys = *outer.b;
  const auto& inner = ab_sys.composite();
  SteeringDims d{};
  d.dc = c_sys.state_cone().matrix_dim();
  d.da = inner.a->state_cone().matrix_dim();
  d.db = inner.b->state_cone().matrix_dim();
  d.complex_kind = is_complex_kind(ab_sys);
  return d;
}

template <typename K>
SteeringMap steering_impl(const Purification& global, const GptState& target,
                          int target_index, const SteeringDims& dims) {
  using M = typename K::M;
  using V = typename K::V;
  const GptSystem& ab_sys = *global.state.system.composite().b;

  // dilations of the same B state are required
  const Vec mg = marginal_vec(ab_sys, global.purified_marginal.vec, Keep::kB);
  const Vec mt = marginal_vec(ab_sys, target.vec, Keep::kB);
  if ((mg - mt).norm() > 1e-8 * (1.0 + mg.norm()))
    throw ContractViolation(
        "steering_transform: target and purified state have different "
        "B-marginals; steering is impossible");

  const int dp = dims.dc * dims.da;
  const V psi_g = pure_vector<K>(K::mat(global.state.vec));
  const Purification pt = purify(target, dims.dc);
  const V psi_t = pure_vector<K>(K::mat(pt.state.vec));

  using RowMajor =
      Eigen::Matrix<typename V::Scalar, Eigen::Dynamic, Eigen::Dynamic,
                    Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> m_g(psi_g.data(), dp, dims.db);
  const Eigen::Map<const RowMajor> m_t(psi_t.data(), dp, dims.db);

  const M w = uhlmann_core<M>(M(m_g), M(m_t));

  SteeringMap map;
  map.unitary = w.template cast<std::complex<double>>();
  map.target_index = target_index;
  map.dim_c = dims.dc;
  map.dim_a = dims.da;
  map.dim_b = dims.db;

  const GptState steered = apply_steering(map, global);
  const double resid = (steered.vec - target.vec).norm();
  if (resid > 1e-8)
    throw ContractViolation(
        "steering_transform: reproduction residual " + std::to_string(resid) +
        " exceeds 1e-8");
  return map;
}

template <typename K>
GptState apply_impl(const SteeringMap& map, const Purification& global) {
  using M = typename K::M;
  using V = typename K::V;
  const GptSystem& ab_sys = *global.state.system.composite().b;
  const int dp = map.dim_c * map.dim_a;
  const V psi = pure_vector<K>(K::mat(global.state.vec));
  using RowMajor =
      Eigen::Matrix<typename V::Scalar, Eigen::Dynamic, Eigen::Dynamic,
                    Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> mg(psi.data(), dp, map.dim_b);
  M w(dp, dp);
  if constexpr (std::is_same_v<M, CMat>) {
    w = map.unitary;
  } else {
    if (map.unitary.imag().norm() > 1e-10)
      throw ContractViolation(
          "apply_steering: complex unitary on a real-quantum system");
    w = map.unitary.real();
  }
  const RowMajor steered_rm = w * M(mg);
  V psi2(dp * map.dim_b);
  for (int p = 0; p < dp; ++p)
    for (int b = 0; b < map.dim_b; ++b)
      psi2[p * map.dim_b + b] = steered_rm(p, b);
  const M dens = psi2 * psi2.adjoint();
  const M ab = partial_trace(dens, map.dim_c, map.dim_a * map.dim_b, true);
  return GptState{ab_sys, K::vec(ab)};
}

}  // namespace

SteeringMap steering_transform(const Purification& global,
                               const GptState& target, int target_index) {
  const SteeringDims dims = steering_dims(global);
  if (target.vec.size() != global.purified_marginal.vec.size())
    throw ContractViolation("steering_transform: target lives on the wrong "
                            "system");
  return dims.complex_kind
             ? steering_impl<ComplexKind>(global, target, target_index, dims)
             : steering_impl<RealKind>(global, target, target_index, dims);
}

GptState apply_steering(const SteeringMap& map, const Purification& global) {
  const SteeringDims dims = steering_dims(global);
  return dims.complex_kind ? apply_impl<ComplexKind>(map, global)
                           : apply_impl<RealKind>(map, global);
}

CMat uhlmann_unitary(const CMat& psi1, const CMat& psi2) {
  return uhlmann_core<CMat>(psi1, psi2);
}

Mat uhlmann_unitary(const Mat& psi1, const Mat& psi2) {
  return uhlmann_core<Mat>(psi1, psi2);
}

}  // namespace gptcone
