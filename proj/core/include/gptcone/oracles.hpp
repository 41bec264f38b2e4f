// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gptcone/coneprog.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

// Independent brute-force and closed-form certifiers for the solver and the
// commitment analysis. These deliberately avoid the solver's code paths.

struct OracleResult {
  double value = 0.0;
  std::vector<Vec> witness;  // optimal measurement / vertex, if available
  std::string method;
};

/// Closed-form minimum-error discrimination of two equally likely density
/// matrices: 1/2 + ||rho0 - rho1||_1 / 4, witness = the sign-projector
/// two-outcome measurement in Hermitian vectorization.
OracleResult helstrom(const CMat& rho0, const CMat& rho1);

/// Exhaustive enumeration of basic feasible solutions of a linear program
/// over an Orthant (or PolyhedralV, via substitution) cone. The feasible
/// region is assumed bounded. Limits: ambient dimension <= 8, constraint
/// rows <= 24.
OracleResult lp_vertex_enumeration(const ConeProgram& p);

/// Grid search over mixtures of the square gbit's extremal effects,
/// returning a certified lower bound on the discrimination value
/// (1/n) max sum_j f^j[rho^j]. For n = 2 the optimum sits at an enumerated
/// extremal effect, so the bound is exact up to numerical noise; for
/// n in {3, 4} the documented slack is n * resolution.
struct GbitOracleResult {
  double value = 0.0;
  double slack = 0.0;  // solver value may exceed the bound by at most this
  std::vector<Vec> witness;
};
GbitOracleResult exhaustive_gbit_discrimination(const std::vector<Vec>& states,
                                                double resolution = 1e-3);

}  // namespace gptcone
