// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "gptcone/gpt.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

// Quantum-concrete realization of the Purification Postulate. Purifications
// place the ancilla as the leading tensor factor: a state rho on B becomes
// a pure state on C (x) B, so that for a bipartite rho on A (x) B the
// purifying pair C (x) A is the contiguous leading block of C (x) (A (x) B).

struct Purification {
  GptState state;             // pure state on C (x) B
  GptState purified_marginal; // the input rho, equal to the C-marginal
  int purifying_dim = 0;      // rank of rho (1e-12 eigenvalue cutoff)
};

/// Reversible transformation on the purifying factor steering one dilation
/// into another. `unitary` acts on the leading C (x) A block.
struct SteeringMap {
  CMat unitary;
  int target_index = 0;
  int dim_c = 0;
  int dim_a = 0;
  int dim_b = 0;
};

/// Spectral purification of a physical or subnormalized state of a quantum
/// or real-quantum system. The ancilla dimension defaults to max(1, rank);
/// passing `ancilla_dim` pads with zero rows (needed when several states
/// must share a purifying space).
Purification purify(const GptState& rho);
Purification purify(const GptState& rho, int ancilla_dim);

/// Canonical dilation of a subnormalized state r of the B factor into the
/// composite A (x) B: the purification embedded with A as ancilla. Requires
/// dim A >= rank(r).
Vec dilate(const Vec& r, const GptSystem& composite_ab);

/// Uhlmann construction: given a purification `global` of some chi^1 on
/// A (x) B (hence of the common B-marginal, with purifying factor C (x) A)
/// and another dilation `target` of the same B-marginal, computes a unitary
/// on C (x) A such that applying it to `global` and discarding C reproduces
/// `target`. Throws ContractViolation if the B-marginals differ or the
/// reproduction residual exceeds 1e-8.
SteeringMap steering_transform(const Purification& global,
                               const GptState& target, int target_index = 0);

/// Applies the steering unitary to the purification and discards the
/// ancilla C, returning the resulting state on A (x) B.
GptState apply_steering(const SteeringMap& map, const Purification& global);

/// Unitary W with W psi1 = psi2 for two purifications given as dP x dB
/// matrices with equal Gram matrices psi^dag psi (singular-value matching,
/// orthonormal completion in deterministic Gram-Schmidt order).
CMat uhlmann_unitary(const CMat& psi1, const CMat& psi2);
Mat uhlmann_unitary(const Mat& psi1, const Mat& psi2);

}  // namespace gptcone
