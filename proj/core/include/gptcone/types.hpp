// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Dense>

namespace gptcone {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Default membership tolerance used throughout (exposed as a parameter on
/// every membership check so tests can tighten it).
inline constexpr double kMembershipTol = 1e-8;

/// Eigenvalues below this are treated as zero when computing ranks.
inline constexpr double kRankTol = 1e-12;

}  // namespace gptcone
