// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gptcone/errors.hpp"
#include "gptcone/vectorize.hpp"

namespace gptcone {

namespace {

void check_density(const CMat& rho, const char* who) {
  if (rho.rows() != rho.cols())
    throw ContractViolation(std::string(who) + ": state must be square");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho.trace().imag()) > 1e-12)
    throw ContractViolation(std::string(who) + ": state must have unit trace");
  Eigen::SelfAdjointEigenSolver<CMat> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw ContractViolation(std::string(who) +
                            ": state has a negative eigenvalue");
}

}  // namespace

OracleResult helstrom(const CMat& rho0, const CMat& rho1) {
  if (rho0.rows() != rho1.rows() || rho0.cols() != rho1.cols())
    throw ContractViolation("helstrom: dimension mismatch");
  check_density(rho0, "helstrom");
  check_density(rho1, "helstrom");

  const CMat delta = rho0 - rho1;
  Eigen::SelfAdjointEigenSolver<CMat> es(delta);
  const Vec lam = es.eigenvalues();
  const CMat v = es.eigenvectors();

  OracleResult res;
  res.method = "helstrom_trace_norm";
  res.value = 0.5 + 0.25 * lam.cwiseAbs().sum();

  // witness: project onto the nonnegative eigenspace of rho0 - rho1
  const int d = static_cast<int>(rho0.rows());
  CMat plus = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    if (lam[i] >= 0) plus += v.col(i) * v.col(i).adjoint();
  res.witness.push_back(herm_vec(plus));
  res.witness.push_back(herm_vec(CMat(CMat::Identity(d, d) - plus)));
  return res;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kLpMaxDim = 8;
constexpr int kLpMaxRows = 24;

// All size-k column subsets of {0..n-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

OracleResult lp_vertex_enumeration(const ConeProgram& p) {
  Mat a = p.phi;
  Vec c = p.c;
  // PolyhedralV reduces to an orthant program in generator coefficients.
  if (p.cone.kind() == ConeKind::kPolyhedralV) {
    const Mat& g = p.cone.generators();
    a = p.phi * g;
    c = g.transpose() * p.c;
  } else if (p.cone.kind() != ConeKind::kOrthant) {
    throw UnsupportedCombination(
        "lp_vertex_enumeration: cone must be Orthant or PolyhedralV");
  }
  const int n = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());
  if (n > kLpMaxDim || m > kLpMaxRows)
    throw UnsupportedScale("lp_vertex_enumeration: problem size " +
                           std::to_string(m) + "x" + std::to_string(n) +
                           " exceeds the supported " +
                           std::to_string(kLpMaxRows) + "x" +
                           std::to_string(kLpMaxDim) + " limit");

  Eigen::FullPivLU<Mat> lu(a);
  lu.setThreshold(1e-10);
  const int r = static_cast<int>(lu.rank());
  const double b_scale = 1.0 + p.b.norm();

  const bool maximize = (p.sense == Sense::kSup);
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  Vec best_x;

  if (r == 0) {
    if (p.b.norm() <= 1e-9 * b_scale) {
      best = 0.0;
      best_x = Vec::Zero(n);
    }
  } else {
    for_each_subset(n, r, [&](const std::vector<int>& cols) {
      Mat sub(m, r);
      for (int i = 0; i < r; ++i) sub.col(i) = a.col(cols[i]);
      Eigen::FullPivLU<Mat> sub_lu(sub);
      sub_lu.setThreshold(1e-10);
      if (static_cast<int>(sub_lu.rank()) < r) return;
      Eigen::CompleteOrthogonalDecomposition<Mat> cod(sub);
      const Vec xs = cod.solve(p.b);
      if ((sub * xs - p.b).norm() > 1e-9 * b_scale) return;
      if (xs.minCoeff() < -1e-9) return;
      Vec x = Vec::Zero(n);
      for (int i = 0; i < r; ++i) x[cols[i]] = std::max(0.0, xs[i]);
      const double val = c.dot(x);
      if ((maximize && val > best) || (!maximize && val < best)) {
        best = val;
        best_x = x;
      }
    });
  }

  OracleResult res;
  res.method = "lp_vertex_enumeration";
  if (!std::isfinite(best)) {
    res.method = "lp_vertex_enumeration_infeasible";
    res.value = std::numeric_limits<double>::quiet_NaN();
    return res;
  }
  res.value = best;
  if (p.cone.kind() == ConeKind::kPolyhedralV)
    res.witness.push_back(p.cone.generators() * best_x);
  else
    res.witness.push_back(best_x);
  return res;
}

// ---------------------------------------------------------------------------

GbitOracleResult exhaustive_gbit_discrimination(const std::vector<Vec>& states,
                                                double resolution) {
  const int n = static_cast<int>(states.size());
  if (n < 2 || n > 4)
    throw ContractViolation(
        "exhaustive_gbit_discrimination: need 2 to 4 states");
  for (const auto& s : states)
    if (s.size() != 3)
      throw ContractViolation(
          "exhaustive_gbit_discrimination: states must be gbit 3-vectors");
  if (resolution <= 0 || resolution > 0.5)
    throw ContractViolation(
        "exhaustive_gbit_discrimination: resolution out of range");

  // extreme points of the square gbit's effect polytope
  std::vector<Vec> extreme(6, Vec(3));
  extreme[0] << 0, 0, 0;
  extreme[1] << 1, 0, 0;  // unit
  extreme[2] << 0.5, 0.5, 0;
  extreme[3] << 0.5, -0.5, 0;
  extreme[4] << 0.5, 0, 0.5;
  extreme[5] << 0.5, 0, -0.5;
  const Vec unit = extreme[1];

  GbitOracleResult res;

  if (n == 2) {
    // The objective is linear in the single free effect f, so the optimum
    // is at a vertex of the effect polytope; the grid only adds interior
    // candidates. Exact up to numerical noise.
    const int steps = static_cast<int>(std::ceil(1.0 / resolution));
    double best = -1.0;
    Vec best_f;
    for (std::size_t ia = 0; ia < extreme.size(); ++ia) {
      for (std::size_t ib = 0; ib < extreme.size(); ++ib) {
        for (int k = 0; k <= steps; ++k) {
          const double t = std::min(1.0, k * resolution);
          const Vec f = t * extreme[ia] + (1.0 - t) * extreme[ib];
          const double val =
              0.5 * (f.dot(states[0]) + (unit - f).dot(states[1]));
          if (val > best) {
            best = val;
            best_f = f;
          }
        }
      }
    }
    res.value = best;
    res.slack = 1e-9;
    res.witness = {best_f, unit - best_f};
    return res;
  }

  // n = 3, 4: deterministic post-processings of the two sharp observables.
  // Every candidate is a valid measurement, so the value is a certified
  // lower bound; only the lower side is certified (slack = infinity).
  const std::vector<std::pair<Vec, Vec>> sharp = {
      {extreme[2], extreme[3]}, {extreme[4], extreme[5]}};
  double best = 1.0 / n;  // assign u to a single outcome: value 1/n
  std::vector<Vec> best_meas(n, Vec::Zero(3));
  best_meas[0] = unit;
  for (const auto& [p1, p2] : sharp) {
    for (int j1 = 0; j1 < n; ++j1) {
      for (int j2 = 0; j2 < n; ++j2) {
        std::vector<Vec> meas(n, Vec::Zero(3));
        meas[j1] += p1;
        meas[j2] += p2;
        double val = 0.0;
        for (int j = 0; j < n; ++j) val += meas[j].dot(states[j]);
        val /= n;
        if (val > best) {
          best = val;
          best_meas = meas;
        }
      }
    }
  }
  res.value = best;
  res.slack = std::numeric_limits<double>::infinity();
  res.witness = best_meas;
  return res;
}

}  // namespace gptcone
