// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/cones.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "gptcone/errors.hpp"
#include "gptcone/vectorize.hpp"

namespace gptcone {

namespace {

constexpr double kDdZeroTol = 1e-10;

void check_dim(const ConeSpec& cone, const Vec& v, const char* who) {
  if (v.size() != cone.ambient_dim())
    throw ContractViolation(std::string(who) + ": vector length " +
                            std::to_string(v.size()) +
                            " does not match ambient dimension " +
                            std::to_string(cone.ambient_dim()));
}

const char* kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::kOrthant: return "Orthant";
    case ConeKind::kPsdReal: return "PsdReal";
    case ConeKind::kPsdComplex: return "PsdComplex";
    case ConeKind::kPolyhedralV: return "PolyhedralV";
    case ConeKind::kPolyhedralH: return "PolyhedralH";
    case ConeKind::kProduct: return "Product";
    case ConeKind::kFree: return "Free";
    case ConeKind::kZero: return "Zero";
  }
  return "?";
}

void check_dd_scale(int dim, int rows, const char* who) {
  if (dim > kDdMaxDim || rows > kDdMaxRows)
    throw UnsupportedScale(std::string(who) + ": polyhedral computation at " +
                           std::to_string(rows) + " rays/inequalities in R^" +
                           std::to_string(dim) + " exceeds the supported " +
                           std::to_string(kDdMaxRows) + " x R^" +
                           std::to_string(kDdMaxDim) + " limit");
}

Mat normalized_columns(const Mat& g) {
  Mat out = g;
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    const double nrm = out.col(j).norm();
    if (nrm > 0) out.col(j) /= nrm;
  }
  return out;
}

// Drop duplicate unit columns (same ray up to positive scaling).
Mat dedupe_columns(const Mat& g) {
  std::vector<int> keep;
  for (int j = 0; j < g.cols(); ++j) {
    bool dup = false;
    for (int k : keep)
      if (g.col(j).dot(g.col(k)) > 1.0 - 1e-12) { dup = true; break; }
    if (!dup) keep.push_back(j);
  }
  Mat out(g.rows(), static_cast<int>(keep.size()));
  for (int j = 0; j < out.cols(); ++j) out.col(j) = g.col(keep[j]);
  return out;
}

// Remove generators expressible as nonnegative combinations of the others.
// Input columns must be unit and deduplicated.
Mat minimal_generators(const Mat& g) {
  std::vector<int> alive(g.cols());
  for (int j = 0; j < g.cols(); ++j) alive[j] = j;
  for (int j = 0; j < g.cols(); ++j) {
    if (alive.size() <= 1) break;
    auto it = std::find(alive.begin(), alive.end(), j);
    if (it == alive.end()) continue;
    Mat rest(g.rows(), static_cast<int>(alive.size()) - 1);
    int c = 0;
    for (int k : alive)
      if (k != j) rest.col(c++) = g.col(k);
    Vec proj;
    detail::nnls(rest, g.col(j), &proj);
    if ((proj - g.col(j)).norm() <= 1e-9) alive.erase(it);
  }
  Mat out(g.rows(), static_cast<int>(alive.size()));
  for (int j = 0; j < out.cols(); ++j) out.col(j) = g.col(alive[j]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConeSpec construction

ConeSpec ConeSpec::orthant(int dim) {
  if (dim <= 0) throw ContractViolation("orthant: dimension must be positive");
  ConeSpec c;
  c.kind_ = ConeKind::kOrthant;
  c.ambient_dim_ = dim;
  return c;
}

ConeSpec ConeSpec::psd_real(int n) {
  if (n <= 0) throw ContractViolation("psd_real: dimension must be positive");
  ConeSpec c;
  c.kind_ = ConeKind::kPsdReal;
  c.ambient_dim_ = sym_vec_dim(n);
  c.matrix_dim_ = n;
  return c;
}

ConeSpec ConeSpec::psd_complex(int n) {
  if (n <= 0)
    throw ContractViolation("psd_complex: dimension must be positive");
  ConeSpec c;
  c.kind_ = ConeKind::kPsdComplex;
  c.ambient_dim_ = herm_vec_dim(n);
  c.matrix_dim_ = n;
  return c;
}

ConeSpec ConeSpec::polyhedral_v(const Mat& generators) {
  if (generators.rows() <= 0)
    throw ContractViolation("polyhedral_v: ambient dimension must be positive");
  for (Eigen::Index j = 0; j < generators.cols(); ++j)
    if (generators.col(j).norm() == 0.0)
      throw ContractViolation("polyhedral_v: generator " + std::to_string(j) +
                              " is the zero vector");
  ConeSpec c;
  c.kind_ = ConeKind::kPolyhedralV;
  c.ambient_dim_ = static_cast<int>(generators.rows());
  c.data_ = generators;
  return c;
}

ConeSpec ConeSpec::polyhedral_h(const Mat& inequalities) {
  if (inequalities.cols() <= 0)
    throw ContractViolation("polyhedral_h: ambient dimension must be positive");
  for (Eigen::Index i = 0; i < inequalities.rows(); ++i)
    if (inequalities.row(i).norm() == 0.0)
      throw ContractViolation("polyhedral_h: inequality " + std::to_string(i) +
                              " is the zero covector");
  ConeSpec c;
  c.kind_ = ConeKind::kPolyhedralH;
  c.ambient_dim_ = static_cast<int>(inequalities.cols());
  c.data_ = inequalities;
  return c;
}

ConeSpec ConeSpec::product(std::vector<ConeSpec> factors) {
  if (factors.empty())
    throw ContractViolation("product: at least one factor required");
  ConeSpec c;
  c.kind_ = ConeKind::kProduct;
  c.ambient_dim_ = 0;
  for (const auto& f : factors) c.ambient_dim_ += f.ambient_dim();
  c.factors_ = std::move(factors);
  return c;
}

ConeSpec ConeSpec::free(int dim) {
  if (dim <= 0) throw ContractViolation("free: dimension must be positive");
  ConeSpec c;
  c.kind_ = ConeKind::kFree;
  c.ambient_dim_ = dim;
  return c;
}

ConeSpec ConeSpec::zero(int dim) {
  if (dim <= 0) throw ContractViolation("zero: dimension must be positive");
  ConeSpec c;
  c.kind_ = ConeKind::kZero;
  c.ambient_dim_ = dim;
  return c;
}

int ConeSpec::matrix_dim() const {
  if (kind_ != ConeKind::kPsdReal && kind_ != ConeKind::kPsdComplex)
    throw ContractViolation("matrix_dim: not a PSD cone");
  return matrix_dim_;
}

const Mat& ConeSpec::generators() const {
  if (kind_ != ConeKind::kPolyhedralV)
    throw ContractViolation("generators: not a PolyhedralV cone");
  return data_;
}

const Mat& ConeSpec::inequalities() const {
  if (kind_ != ConeKind::kPolyhedralH)
    throw ContractViolation("inequalities: not a PolyhedralH cone");
  return data_;
}

const std::vector<ConeSpec>& ConeSpec::factors() const {
  if (kind_ != ConeKind::kProduct)
    throw ContractViolation("factors: not a Product cone");
  return factors_;
}

bool ConeSpec::operator==(const ConeSpec& other) const {
  if (kind_ != other.kind_ || ambient_dim_ != other.ambient_dim_ ||
      matrix_dim_ != other.matrix_dim_)
    return false;
  if (data_.rows() != other.data_.rows() || data_.cols() != other.data_.cols())
    return false;
  if (data_.size() > 0 && data_ != other.data_) return false;
  return factors_ == other.factors_;
}

// ---------------------------------------------------------------------------
// NNLS (projected gradient with FISTA momentum and restart)

namespace detail {

Vec nnls(const Mat& g, const Vec& v, Vec* projection, int max_iter,
         double tol) {
  const int m = static_cast<int>(g.cols());
  if (m == 0) {
    if (projection) *projection = Vec::Zero(v.size());
    return Vec();
  }
  const Mat gtg = g.transpose() * g;
  const Vec gtv = g.transpose() * v;
  const double lip = std::max(
      1e-12, Eigen::SelfAdjointEigenSolver<Mat>(gtg).eigenvalues().maxCoeff());
  const double scale = std::max(1.0, v.norm());

  Vec c = Vec::Zero(m), y = c, c_prev = c;
  double t = 1.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    const Vec grad_c = gtg * c - gtv;
    residual = (c - (c - grad_c / lip).cwiseMax(0.0)).lpNorm<Eigen::Infinity>();
    if (residual <= tol * scale) {
      if (projection) *projection = g * c;
      return c;
    }
    const Vec grad = gtg * y - gtv;
    c_prev = c;
    c = (y - grad / lip).cwiseMax(0.0);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = c + ((t - 1.0) / t_next) * (c - c_prev);
    t = t_next;
    // restart momentum when it points uphill
    if (grad.dot(c - c_prev) > 0) {
      y = c;
      t = 1.0;
    }
  }
  throw NumericalFailure("nnls: projected-gradient iteration cap reached",
                         residual);
}

// ---------------------------------------------------------------------------
// Double description: extreme rays of {x : H x >= 0}

namespace {

int rank_of_rows(const Mat& h, std::uint64_t mask, int n_rows) {
  std::vector<int> idx;
  for (int i = 0; i < n_rows; ++i)
    if (mask & (std::uint64_t(1) << i)) idx.push_back(i);
  if (idx.empty()) return 0;
  Mat sub(static_cast<int>(idx.size()), h.cols());
  for (int i = 0; i < static_cast<int>(idx.size()); ++i)
    sub.row(i) = h.row(idx[i]);
  Eigen::FullPivLU<Mat> lu(sub);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

}  // namespace

Mat dd_rays(const Mat& h_in) {
  const int d = static_cast<int>(h_in.cols());
  const int m = static_cast<int>(h_in.rows());
  check_dd_scale(d, m, "dd_rays");
  if (m == 0)
    throw UnsupportedScale("dd_rays: no inequalities (cone is all of R^d)");

  Mat h = h_in;
  for (int i = 0; i < m; ++i) h.row(i).normalize();

  // Split off the lineality space and work in its orthogonal complement,
  // where the cone is pointed.
  Eigen::JacobiSVD<Mat> svd(h, Eigen::ComputeFullV);
  const double sv_tol = 1e-10 * std::max(1.0, svd.singularValues()[0]);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > sv_tol) ++rank;
  const Mat basis = svd.matrixV().leftCols(rank);     // row space of H
  const Mat lineality = svd.matrixV().rightCols(d - rank);
  const Mat hq = h * basis;                            // m x rank
  const int dq = rank;

  // Initial simplicial cone from a full-rank subsystem of inequalities.
  std::vector<int> init_rows;
  {
    Mat acc(0, dq);
    for (int i = 0; i < m && static_cast<int>(init_rows.size()) < dq; ++i) {
      Mat trial(acc.rows() + 1, dq);
      trial.topRows(acc.rows()) = acc;
      trial.row(acc.rows()) = hq.row(i);
      Eigen::FullPivLU<Mat> lu(trial);
      lu.setThreshold(1e-10);
      if (static_cast<int>(lu.rank()) == trial.rows()) {
        acc = trial;
        init_rows.push_back(i);
      }
    }
  }
  Mat h0(dq, dq);
  for (int i = 0; i < dq; ++i) h0.row(i) = hq.row(init_rows[i]);
  const Mat h0_inv = h0.inverse();

  struct Ray {
    Vec dir;                 // unit vector in the quotient space
    std::uint64_t active;    // processed inequalities satisfied with equality
  };
  std::vector<Ray> rays;
  std::uint64_t processed = 0;
  for (int i : init_rows) processed |= std::uint64_t(1) << i;
  for (int j = 0; j < dq; ++j) {
    Ray r;
    r.dir = h0_inv.col(j).normalized();
    r.active = 0;
    for (int i : init_rows)
      if (std::abs(hq.row(i).dot(r.dir)) <= kDdZeroTol)
        r.active |= std::uint64_t(1) << i;
    rays.push_back(std::move(r));
  }

  for (int i = 0; i < m; ++i) {
    if (processed & (std::uint64_t(1) << i)) continue;
    const Vec hi = hq.row(i).transpose();
    std::vector<Ray> pos, zero, neg;
    for (auto& r : rays) {
      const double s = hi.dot(r.dir);
      if (s > kDdZeroTol)
        pos.push_back(r);
      else if (s < -kDdZeroTol)
        neg.push_back(r);
      else {
        Ray z = r;
        z.active |= std::uint64_t(1) << i;
        zero.push_back(std::move(z));
      }
    }
    std::vector<Ray> next = pos;
    for (auto& z : zero) next.push_back(z);
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const std::uint64_t common = p.active & q.active;
        // adjacency: the common active constraints have rank dq - 2
        if (dq >= 2 && rank_of_rows(hq, common, m) != dq - 2) continue;
        Vec dir = hi.dot(p.dir) * q.dir - hi.dot(q.dir) * p.dir;
        const double nrm = dir.norm();
        if (nrm <= kDdZeroTol) continue;
        dir /= nrm;
        bool dup = false;
        for (const auto& r : next)
          if (dir.dot(r.dir) > 1.0 - 1e-9) { dup = true; break; }
        if (dup) continue;
        Ray nr;
        nr.dir = dir;
        nr.active = common | (std::uint64_t(1) << i);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    processed |= std::uint64_t(1) << i;
  }

  const int n_lin = static_cast<int>(lineality.cols());
  Mat out(d, static_cast<int>(rays.size()) + 2 * n_lin);
  for (int j = 0; j < static_cast<int>(rays.size()); ++j)
    out.col(j) = (basis * rays[j].dir).normalized();
  for (int j = 0; j < n_lin; ++j) {
    out.col(rays.size() + 2 * j) = lineality.col(j);
    out.col(rays.size() + 2 * j + 1) = -lineality.col(j);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// project / contains

Vec project(const ConeSpec& cone, const Vec& v) {
  check_dim(cone, v, "project");
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return v.cwiseMax(0.0);
    case ConeKind::kPsdReal: {
      Eigen::SelfAdjointEigenSolver<Mat> es(sym_mat(v));
      const Vec lam = es.eigenvalues().cwiseMax(0.0);
      return sym_vec(es.eigenvectors() * lam.asDiagonal() *
                     es.eigenvectors().transpose());
    }
    case ConeKind::kPsdComplex: {
      Eigen::SelfAdjointEigenSolver<CMat> es(herm_mat(v));
      const Vec lam = es.eigenvalues().cwiseMax(0.0);
      return herm_vec(es.eigenvectors() * lam.asDiagonal() *
                      es.eigenvectors().adjoint());
    }
    case ConeKind::kPolyhedralV: {
      Vec proj;
      detail::nnls(normalized_columns(cone.generators()), v, &proj);
      return proj;
    }
    case ConeKind::kPolyhedralH: {
      // Moreau: Pi_K(v) = v + Pi_{K*}(-v) with K* generated by the rows.
      if (cone.inequalities().rows() == 0) return v;
      Vec proj;
      detail::nnls(normalized_columns(cone.inequalities().transpose()), -v,
                   &proj);
      return v + proj;
    }
    case ConeKind::kProduct: {
      Vec out(v.size());
      int off = 0;
      for (const auto& f : cone.factors()) {
        out.segment(off, f.ambient_dim()) =
            project(f, v.segment(off, f.ambient_dim()));
        off += f.ambient_dim();
      }
      return out;
    }
    case ConeKind::kFree:
      return v;
    case ConeKind::kZero:
      return Vec::Zero(v.size());
  }
  throw ContractViolation("project: unknown cone kind");
}

bool contains(const ConeSpec& cone, const Vec& v, double tol) {
  check_dim(cone, v, "contains");
  return (v - project(cone, v)).norm() <= tol;
}

// ---------------------------------------------------------------------------
// dual_cone

ConeSpec dual_cone(const ConeSpec& cone) {
  switch (cone.kind()) {
    case ConeKind::kOrthant:
    case ConeKind::kPsdReal:
    case ConeKind::kPsdComplex:
      return cone;  // self-dual under the trace / dot inner product
    case ConeKind::kPolyhedralV: {
      check_dd_scale(cone.ambient_dim(),
                     static_cast<int>(cone.generators().cols()), "dual_cone");
      return ConeSpec::polyhedral_h(cone.generators().transpose());
    }
    case ConeKind::kPolyhedralH: {
      check_dd_scale(cone.ambient_dim(),
                     static_cast<int>(cone.inequalities().rows()), "dual_cone");
      // The dual of {x : H x >= 0} is the cone generated by the rows of H;
      // reduce that generator set to its extreme rays.
      const Mat gens = minimal_generators(
          dedupe_columns(normalized_columns(cone.inequalities().transpose())));
      return ConeSpec::polyhedral_v(gens);
    }
    case ConeKind::kProduct: {
      std::vector<ConeSpec> duals;
      duals.reserve(cone.factors().size());
      for (const auto& f : cone.factors()) duals.push_back(dual_cone(f));
      return ConeSpec::product(std::move(duals));
    }
    case ConeKind::kFree:
      return ConeSpec::zero(cone.ambient_dim());
    case ConeKind::kZero:
      return ConeSpec::free(cone.ambient_dim());
  }
  throw ContractViolation("dual_cone: unknown cone kind");
}

// ---------------------------------------------------------------------------
// interior_point / interior_margin

namespace {

// Damped Newton ascent on sum_i log(h_i . x) - (m/2)|x|^2, seeded strictly
// inside the cone. The maximizer is an analytic-center style point.
Vec analytic_center(const Mat& h_unit, const Vec& seed) {
  const int m = static_cast<int>(h_unit.rows());
  const int d = static_cast<int>(h_unit.cols());
  Vec x = seed;
  const auto value = [&](const Vec& p) {
    const Vec s = h_unit * p;
    if (s.minCoeff() <= 0) return -std::numeric_limits<double>::infinity();
    return s.array().log().sum() - 0.5 * m * p.squaredNorm();
  };
  for (int it = 0; it < 50; ++it) {
    const Vec s = h_unit * x;
    if (s.minCoeff() <= 0)
      throw NumericalFailure("interior_point: analytic-center seed infeasible",
                             -s.minCoeff());
    const Vec grad =
        h_unit.transpose() * s.cwiseInverse() - double(m) * x;
    if (grad.norm() <= 1e-10 * (1.0 + x.norm())) break;
    Mat hess = double(m) * Mat::Identity(d, d);
    for (int i = 0; i < m; ++i)
      hess += (h_unit.row(i).transpose() * h_unit.row(i)) / (s[i] * s[i]);
    const Vec step = hess.ldlt().solve(grad);
    double t = 1.0;
    const double f0 = value(x);
    while (t > 1e-12 && value(x + t * step) <= f0) t *= 0.5;
    if (t <= 1e-12) break;
    x += t * step;
  }
  return x;
}

}  // namespace

Vec interior_point(const ConeSpec& cone) {
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return Vec::Ones(cone.ambient_dim());
    case ConeKind::kPsdReal:
      return sym_vec(Mat::Identity(cone.matrix_dim(), cone.matrix_dim()));
    case ConeKind::kPsdComplex:
      return herm_vec(CMat::Identity(cone.matrix_dim(), cone.matrix_dim()));
    case ConeKind::kPolyhedralV: {
      if (cone.generators().cols() == 0)
        throw ContractViolation("interior_point: cone has no generators");
      return cone.generators().rowwise().mean();
    }
    case ConeKind::kPolyhedralH: {
      if (cone.inequalities().rows() == 0)
        return Vec::Zero(cone.ambient_dim());
      const Mat rays = detail::dd_rays(cone.inequalities());
      if (rays.cols() == 0)
        throw NumericalFailure("interior_point: cone has empty interior", 0.0);
      Mat h = cone.inequalities();
      for (Eigen::Index i = 0; i < h.rows(); ++i) h.row(i).normalize();
      const Vec seed = rays.rowwise().mean();
      if ((h * seed).minCoeff() <= 0)
        throw NumericalFailure("interior_point: cone has empty interior",
                               -(h * seed).minCoeff());
      return analytic_center(h, seed);
    }
    case ConeKind::kProduct: {
      Vec out(cone.ambient_dim());
      int off = 0;
      for (const auto& f : cone.factors()) {
        out.segment(off, f.ambient_dim()) = interior_point(f);
        off += f.ambient_dim();
      }
      return out;
    }
    case ConeKind::kFree:
      return Vec::Zero(cone.ambient_dim());
    case ConeKind::kZero:
      throw ContractViolation(
          "interior_point: Zero cone is not full-dimensional");
  }
  throw ContractViolation("interior_point: unknown cone kind");
}

double interior_margin(const ConeSpec& cone, const Vec& v) {
  check_dim(cone, v, "interior_margin");
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return v.minCoeff();
    case ConeKind::kPsdReal:
      return Eigen::SelfAdjointEigenSolver<Mat>(sym_mat(v))
          .eigenvalues()
          .minCoeff();
    case ConeKind::kPsdComplex:
      return Eigen::SelfAdjointEigenSolver<CMat>(herm_mat(v))
          .eigenvalues()
          .minCoeff();
    case ConeKind::kPolyhedralH: {
      if (cone.inequalities().rows() == 0)
        return std::numeric_limits<double>::infinity();
      Mat h = cone.inequalities();
      for (Eigen::Index i = 0; i < h.rows(); ++i) h.row(i).normalize();
      return (h * v).minCoeff();
    }
    case ConeKind::kPolyhedralV: {
      // margin against the facets, i.e. the extreme rays of the dual cone
      const Mat rays =
          detail::dd_rays(normalized_columns(cone.generators()).transpose());
      if (rays.cols() == 0) return std::numeric_limits<double>::infinity();
      return (rays.transpose() * v).minCoeff();
    }
    case ConeKind::kProduct: {
      double m = std::numeric_limits<double>::infinity();
      int off = 0;
      for (const auto& f : cone.factors()) {
        m = std::min(m, interior_margin(f, v.segment(off, f.ambient_dim())));
        off += f.ambient_dim();
      }
      return m;
    }
    case ConeKind::kFree:
      return std::numeric_limits<double>::infinity();
    case ConeKind::kZero:
      return -std::numeric_limits<double>::infinity();
  }
  throw ContractViolation("interior_margin: unknown cone kind");
}

// ---------------------------------------------------------------------------
// tensor composition

namespace {

Mat generators_of(const ConeSpec& cone, const char* who) {
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return Mat::Identity(cone.ambient_dim(), cone.ambient_dim());
    case ConeKind::kPolyhedralV:
      return cone.generators();
    case ConeKind::kPolyhedralH:
      return detail::dd_rays(cone.inequalities());
    default:
      throw UnsupportedCombination(
          std::string(who) +
          ": factor is not finitely generated (kind " +
          kind_name(cone.kind()) + ")");
  }
}

}  // namespace

ConeSpec tensor_compose(const ConeSpec& a, const ConeSpec& b,
                        ComposeRule rule) {
  if (rule == ComposeRule::kQuantum) {
    if (a.kind() == ConeKind::kPsdReal && b.kind() == ConeKind::kPsdReal)
      return ConeSpec::psd_real(a.matrix_dim() * b.matrix_dim());
    if (a.kind() == ConeKind::kPsdComplex && b.kind() == ConeKind::kPsdComplex)
      return ConeSpec::psd_complex(a.matrix_dim() * b.matrix_dim());
    throw ContractViolation(
        "tensor_compose: quantum rule requires both factors PsdReal or both "
        "PsdComplex");
  }
  // classical composites coincide for min and max
  if (a.kind() == ConeKind::kOrthant && b.kind() == ConeKind::kOrthant)
    return ConeSpec::orthant(a.ambient_dim() * b.ambient_dim());
  if (rule == ComposeRule::kMin) {
    const Mat ga = generators_of(a, "tensor_compose(min)");
    const Mat gb = generators_of(b, "tensor_compose(min)");
    Mat gens(a.ambient_dim() * b.ambient_dim(), ga.cols() * gb.cols());
    for (int i = 0; i < ga.cols(); ++i)
      for (int j = 0; j < gb.cols(); ++j)
        gens.col(i * gb.cols() + j) = kron(Vec(ga.col(i)), Vec(gb.col(j)));
    return ConeSpec::polyhedral_v(gens);
  }
  // max rule: dual of the min composite of the dual factors
  return dual_cone(tensor_compose(dual_cone(a), dual_cone(b),
                                  ComposeRule::kMin));
}

Vec tensor_vector(const ConeSpec& a, const ConeSpec& b, const ConeSpec& ab,
                  const Vec& va, const Vec& vb) {
  check_dim(a, va, "tensor_vector");
  check_dim(b, vb, "tensor_vector");
  const bool psd_a =
      a.kind() == ConeKind::kPsdReal || a.kind() == ConeKind::kPsdComplex;
  const bool psd_b =
      b.kind() == ConeKind::kPsdReal || b.kind() == ConeKind::kPsdComplex;
  if (psd_a != psd_b)
    throw UnsupportedCombination(
        "tensor_vector: cannot mix PSD and coordinate factors");
  if (psd_a) {
    if (a.kind() != b.kind() || ab.kind() != a.kind())
      throw ContractViolation("tensor_vector: composite kind mismatch");
    if (ab.matrix_dim() != a.matrix_dim() * b.matrix_dim())
      throw ContractViolation("tensor_vector: composite dimension mismatch");
    if (a.kind() == ConeKind::kPsdComplex)
      return herm_vec(kron(herm_mat(va), herm_mat(vb)));
    return sym_vec(kron(sym_mat(va), sym_mat(vb)));
  }
  if (ab.ambient_dim() != a.ambient_dim() * b.ambient_dim())
    throw ContractViolation("tensor_vector: composite dimension mismatch");
  return kron(va, vb);
}

Mat extreme_rays(const ConeSpec& cone) {
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return Mat::Identity(cone.ambient_dim(), cone.ambient_dim());
    case ConeKind::kPolyhedralV: {
      check_dd_scale(cone.ambient_dim(),
                     static_cast<int>(cone.generators().cols()),
                     "extreme_rays");
      return minimal_generators(
          dedupe_columns(normalized_columns(cone.generators())));
    }
    case ConeKind::kPolyhedralH:
      return detail::dd_rays(cone.inequalities());
    default:
      throw ContractViolation("extreme_rays: cone kind " +
                              std::string(kind_name(cone.kind())) +
                              " is not polyhedral");
  }
}

// ---------------------------------------------------------------------------
// sampling

Vec sample_point(const ConeSpec& cone, Rng& rng) {
  switch (cone.kind()) {
    case ConeKind::kOrthant:
      return rng.gaussian_vector(cone.ambient_dim()).cwiseAbs();
    case ConeKind::kPsdReal: {
      const int n = cone.matrix_dim();
      Mat g(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
      return sym_vec(Mat(g * g.transpose()) / static_cast<double>(n));
    }
    case ConeKind::kPsdComplex: {
      const int n = cone.matrix_dim();
      const CMat g = rng.gaussian_complex_matrix(n, n);
      return herm_vec(CMat(g * g.adjoint()) / (2.0 * n));
    }
    case ConeKind::kPolyhedralV: {
      const Mat& gens = cone.generators();
      Vec coeff = rng.gaussian_vector(static_cast<int>(gens.cols())).cwiseAbs();
      return gens * coeff;
    }
    case ConeKind::kPolyhedralH: {
      const Mat rays = detail::dd_rays(cone.inequalities());
      if (rays.cols() == 0) return Vec::Zero(cone.ambient_dim());
      Vec coeff = rng.gaussian_vector(static_cast<int>(rays.cols())).cwiseAbs();
      return rays * coeff;
    }
    case ConeKind::kProduct: {
      Vec out(cone.ambient_dim());
      int off = 0;
      for (const auto& f : cone.factors()) {
        out.segment(off, f.ambient_dim()) = sample_point(f, rng);
        off += f.ambient_dim();
      }
      return out;
    }
    case ConeKind::kFree:
      return rng.gaussian_vector(cone.ambient_dim());
    case ConeKind::kZero:
      return Vec::Zero(cone.ambient_dim());
  }
  throw ContractViolation("sample_point: unknown cone kind");
}

}  // namespace gptcone
