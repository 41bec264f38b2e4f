// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/coneprog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gptcone/errors.hpp"

namespace gptcone {

ConeProgram::ConeProgram(Mat phi_, Vec b_, Vec c_, ConeSpec cone_,
                         Sense sense_)
    : phi(std::move(phi_)),
      b(std::move(b_)),
      c(std::move(c_)),
      cone(std::move(cone_)),
      sense(sense_) {
  if (phi.cols() != cone.ambient_dim() || c.size() != cone.ambient_dim())
    throw ContractViolation(
        "ConeProgram: phi columns and c length must equal the cone's "
        "ambient dimension");
  if (phi.rows() != b.size())
    throw ContractViolation("ConeProgram: phi rows must equal b length");
}

ConeProgram dualize(const ConeProgram& p) {
  const int m = static_cast<int>(p.phi.rows());
  const int n = static_cast<int>(p.phi.cols());
  Mat phi_d(n, m + n);
  phi_d.leftCols(m) = p.phi.transpose();
  const double slack_sign = (p.sense == Sense::kSup) ? -1.0 : 1.0;
  phi_d.rightCols(n) = slack_sign * Mat::Identity(n, n);
  Vec c_d = Vec::Zero(m + n);
  c_d.head(m) = p.b;
  ConeSpec cone_d =
      ConeSpec::product({ConeSpec::free(m), dual_cone(p.cone)});
  const Sense sense_d = (p.sense == Sense::kSup) ? Sense::kInf : Sense::kSup;
  return ConeProgram(phi_d, p.c, c_d, cone_d, sense_d);
}

namespace {

// ADMM on  max <c,x>  s.t.  Ax = b, x in K:
//   x   <- argmin_{Ax=b} (rho/2)|x - (z - u + c/rho)|^2
//   z   <- Pi_K(x^ + u),  x^ = relax*x + (1-relax)*z
//   u   <- u + x^ - z
// The affine step is an orthogonal projection through a complete
// orthogonal decomposition of A, so it is exact for rank-deficient A.
// Multiplier recovery: y = rho * (A^T)^+ g with g the affine correction,
// and s = -rho u, which lies in K* exactly (Moreau).
ConeSolution solve_max(const Mat& a, const Vec& b, const Vec& c,
                       const ConeSpec& cone, const SolveOptions& opts) {
  const int n = static_cast<int>(a.cols());
  const double b_scale = 1.0 + b.norm();
  const double c_scale = 1.0 + c.norm();

  Eigen::CompleteOrthogonalDecomposition<Mat> cod_a(a);
  Eigen::CompleteOrthogonalDecomposition<Mat> cod_at(a.transpose());

  ConeSolution sol;
  sol.x = Vec::Zero(n);
  sol.y = Vec::Zero(b.size());
  sol.s = Vec::Zero(n);

  // The least-squares residual of Ax = b is iteration-invariant; if the
  // affine system itself is inconsistent the program is infeasible.
  {
    const Vec x_ls = cod_a.solve(b);
    if ((a * x_ls - b).norm() > std::max(1e-8, opts.tol) * b_scale) {
      sol.status = SolveStatus::kInfeasibleDetected;
      sol.residuals.primal = (a * x_ls - b).norm() / b_scale;
      return sol;
    }
  }

  double rho = 1.0;
  const double relax = 1.6;
  Vec z = Vec::Zero(n), u = Vec::Zero(n), g = Vec::Zero(n);

  constexpr int kCheckEvery = 25;
  constexpr int kRhoAdaptEvery = 100;
  constexpr int kRhoFreezeAfter = 20000;

  int it = 0;
  for (it = 1; it <= opts.max_iter; ++it) {
    const Vec w = z - u + c / rho;
    g = cod_a.solve(a * w - b);
    const Vec x = w - g;
    const Vec xh = relax * x + (1.0 - relax) * z;
    const Vec z_old = z;
    z = project(cone, xh + u);
    u += xh - z;

    const bool last = (it == opts.max_iter);
    if (it % kCheckEvery != 0 && !last) continue;

    const Vec y = rho * cod_at.solve(g);
    const Vec s = -rho * u;
    const double pv = c.dot(z);
    const double dv = b.dot(y);
    const double rp_abs = (a * z - b).norm();
    const double rd_abs = (a.transpose() * y - c - s).norm();
    const double v_scale = 1.0 + std::abs(pv) + std::abs(dv);

    sol.x = z;
    sol.y = y;
    sol.s = s;
    sol.primal_value = pv;
    sol.dual_value = dv;
    sol.residuals.primal = rp_abs / b_scale;
    sol.residuals.dual = rd_abs / c_scale;
    sol.residuals.gap = std::abs(pv - dv) / v_scale;
    sol.iterations = it;

    // weak duality tripwire: dv >= pv up to residual slack
    {
      const double cs = z.dot(s);
      const double slack = 4.0 * (rd_abs * (1.0 + z.norm()) +
                                  rp_abs * (1.0 + y.norm()) +
                                  std::max(0.0, -cs)) +
                           1e-6 * v_scale;
      if (dv - pv < -slack)
        throw NumericalFailure(
            "solve: weak duality violated beyond residual slack "
            "(internal error)",
            pv - dv);
    }

    if (sol.residuals.primal <= opts.tol && sol.residuals.dual <= opts.tol &&
        sol.residuals.gap <= opts.tol) {
      sol.status = SolveStatus::kOptimal;
      return sol;
    }

    if ((rho * u).norm() > 1e4 * (b_scale + c_scale) &&
        sol.residuals.primal > 1e-6) {
      sol.status = SolveStatus::kInfeasibleDetected;
      return sol;
    }

    if (it % kRhoAdaptEvery == 0 && it < kRhoFreezeAfter) {
      const double rd_step = rho * (z - z_old).norm();
      if (rp_abs > 10.0 * rd_step && rho < 1e6) {
        rho *= 2.0;
        u /= 2.0;
      } else if (rd_step > 10.0 * rp_abs && rho > 1e-6) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }

  sol.status = SolveStatus::kMaxIterations;
  return sol;
}

}  // namespace

ConeSolution solve(const ConeProgram& p, const SolveOptions& opts) {
  if (opts.tol <= 0) throw ContractViolation("solve: tol must be positive");
  if (p.sense == Sense::kSup) return solve_max(p.phi, p.b, p.c, p.cone, opts);
  ConeSolution sol = solve_max(p.phi, p.b, Vec(-p.c), p.cone, opts);
  sol.primal_value = -sol.primal_value;
  sol.dual_value = -sol.dual_value;
  sol.y = -sol.y;
  return sol;
}

ConeSolution solve(const ConeProgram& p, double tol, int max_iter) {
  SolveOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  return solve(p, opts);
}

std::optional<Vec> check_slater(const ConeProgram& p) {
  try {
    const Vec x0 = interior_point(p.cone);
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(p.phi);
    const Vec x_hat = x0 - cod.solve(p.phi * x0 - p.b);
    if ((p.phi * x_hat - p.b).norm() > 1e-8 * (1.0 + p.b.norm()))
      return std::nullopt;
    if (interior_margin(p.cone, x_hat) > 1e-9 * (1.0 + x_hat.norm()))
      return x_hat;
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;  // no certificate is a valid answer
  }
}

}  // namespace gptcone
