// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>

#include "gptcone/cones.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

enum class Sense { kSup, kInf };

/// Linear conic program over the data (phi, b, c, cone):
///
///   sup (or inf)  <c, x>   subject to   phi x = b,  x in cone.
///
/// The mechanical dual of a sup-form program is the inf-form program over
/// (y, s): inf <b, y> with phi^T y - s = c and s in the dual cone; dualize()
/// realizes it as another ConeProgram using Free/Zero plumbing cones.
struct ConeProgram {
  Mat phi;
  Vec b;
  Vec c;
  ConeSpec cone;
  Sense sense = Sense::kSup;

  ConeProgram(Mat phi_, Vec b_, Vec c_, ConeSpec cone_, Sense sense_);
};

enum class SolveStatus { kOptimal, kMaxIterations, kInfeasibleDetected };

struct Residuals {
  double primal = 0.0;  // ||phi x - b|| / (1 + ||b||)
  double dual = 0.0;    // ||phi^T y - c - s|| / (1 + ||c||)
  double gap = 0.0;     // |<c,x> - <b,y>| / (1 + |pv| + |dv|)
};

struct ConeSolution {
  Vec x;  // primal iterate, exactly inside the cone
  Vec y;  // multiplier of phi x = b
  Vec s;  // dual slack, exactly inside the dual cone
  double primal_value = 0.0;
  double dual_value = 0.0;
  SolveStatus status = SolveStatus::kMaxIterations;
  Residuals residuals;
  int iterations = 0;
};

struct SolveOptions {
  double tol = 1e-7;
  int max_iter = 200000;
};

/// Mechanical dual program. Applying dualize twice yields a program whose
/// optimal value equals the original's.
ConeProgram dualize(const ConeProgram& p);

/// Alternating projections (ADMM operator splitting) between the affine
/// subspace {phi x = b} and the cone, with the affine subsystem handled by
/// a direct orthogonal factorization. Deterministic: fixed zero initial
/// iterate, fixed iteration order.
///
/// status kOptimal guarantees all three residuals are at most tol;
/// kMaxIterations returns the best iterate with its residuals;
/// kInfeasibleDetected is a divergence-based best-effort flag.
ConeSolution solve(const ConeProgram& p, const SolveOptions& opts = {});
ConeSolution solve(const ConeProgram& p, double tol, int max_iter);

/// Strictly interior feasible point, when the built-in construction finds
/// one: the canonical cone interior point is projected onto the affine
/// subspace and verified for strict interiority. Absence is a valid answer,
/// not an error.
std::optional<Vec> check_slater(const ConeProgram& p);

}  // namespace gptcone
