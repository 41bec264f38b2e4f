// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/vectorize.hpp"

#include <cmath>

#include "gptcone/errors.hpp"

namespace gptcone {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Orthogonal n x n matrix whose rows are the Gell-Mann style diagonal
// combinations: row 0 = 1/sqrt(n), row k = (1,..,1,-k,0,..)/sqrt(k(k+1)).
Mat diag_basis(int n) {
  Mat q = Mat::Zero(n, n);
  q.row(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) q(k, i) = scale;
    q(k, k) = -static_cast<double>(k) * scale;
  }
  return q;
}

void check_square(Eigen::Index rows, Eigen::Index cols, const char* who) {
  if (rows != cols)
    throw ContractViolation(std::string(who) + ": matrix must be square");
}

}  // namespace

int herm_vec_dim(int n) { return n * n; }
int sym_vec_dim(int n) { return n * (n + 1) / 2; }

int herm_mat_dim(int ambient) {
  const int n = static_cast<int>(std::lround(std::sqrt(double(ambient))));
  if (n * n != ambient)
    throw ContractViolation("herm_mat_dim: ambient dimension " +
                            std::to_string(ambient) + " is not a square");
  return n;
}

int sym_mat_dim(int ambient) {
  const int n =
      static_cast<int>(std::lround((std::sqrt(8.0 * ambient + 1.0) - 1) / 2));
  if (n * (n + 1) / 2 != ambient)
    throw ContractViolation("sym_mat_dim: ambient dimension " +
                            std::to_string(ambient) +
                            " is not of the form n(n+1)/2");
  return n;
}

Vec herm_vec(const CMat& m) {
  check_square(m.rows(), m.cols(), "herm_vec");
  const int n = static_cast<int>(m.rows());
  Vec v(herm_vec_dim(n));
  const Mat q = diag_basis(n);
  Vec diag(n);
  for (int i = 0; i < n; ++i) diag[i] = m(i, i).real();
  v.head(n) = q * diag;
  int idx = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v[idx++] = kSqrt2 * m(i, j).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v[idx++] = kSqrt2 * m(i, j).imag();
  return v;
}

CMat herm_mat(const Vec& v) {
  const int n = herm_mat_dim(static_cast<int>(v.size()));
  CMat m = CMat::Zero(n, n);
  const Mat q = diag_basis(n);
  const Vec diag = q.transpose() * v.head(n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i];
  int idx = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double re = v[idx++] / kSqrt2;
      m(i, j) += re;
      m(j, i) += re;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double im = v[idx++] / kSqrt2;
      m(i, j) += std::complex<double>(0.0, im);
      m(j, i) += std::complex<double>(0.0, -im);
    }
  return m;
}

Vec sym_vec(const Mat& m) {
  check_square(m.rows(), m.cols(), "sym_vec");
  const int n = static_cast<int>(m.rows());
  Vec v(sym_vec_dim(n));
  for (int i = 0; i < n; ++i) v[i] = m(i, i);
  int idx = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v[idx++] = kSqrt2 * m(i, j);
  return v;
}

Mat sym_mat(const Vec& v) {
  const int n = sym_mat_dim(static_cast<int>(v.size()));
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = v[i];
  int idx = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = v[idx++] / kSqrt2;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

namespace {

template <typename MatT>
MatT partial_trace_impl(const MatT& m, int da, int db, bool keep_b) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw ContractViolation("partial_trace: matrix is not (da*db) square");
  if (keep_b) {
    MatT out = MatT::Zero(db, db);
    for (int a = 0; a < da; ++a)
      out += m.block(a * db, a * db, db, db);
    return out;
  }
  MatT out = MatT::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      out(a, ap) = m.block(a * db, ap * db, db, db).trace();
  return out;
}

template <typename MatT>
MatT kron_impl(const MatT& a, const MatT& b) {
  MatT out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

CMat partial_trace(const CMat& m, int da, int db, bool keep_b) {
  return partial_trace_impl(m, da, db, keep_b);
}
Mat partial_trace(const Mat& m, int da, int db, bool keep_b) {
  return partial_trace_impl(m, da, db, keep_b);
}

CMat kron(const CMat& a, const CMat& b) { return kron_impl(a, b); }
Mat kron(const Mat& a, const Mat& b) { return kron_impl(a, b); }

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

}  // namespace gptcone
