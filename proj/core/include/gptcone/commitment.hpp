// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gptcone/coneprog.hpp"
#include "gptcone/gpt.hpp"
#include "gptcone/purify.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

/// An n-integer commitment protocol on a composite system A (x) B: Alice
/// commits j by preparing s^j and sending B; at reveal Bob applies the
/// two-outcome test (accept^j, u - accept^j).
struct ICProtocol {
  int n = 0;
  GptSystem system_ab;
  std::vector<Vec> committed_states;  // s^j, physical states of A (x) B
  std::vector<Vec> accept_effects;    // accept^j; reject is u - accept^j

  const GptSystem& system_a() const { return *system_ab.composite().a; }
  const GptSystem& system_b() const { return *system_ab.composite().b; }
};

/// Validating factory: checks counts, physicality of every s^j, validity of
/// every (accept, u - accept) measurement, and the honest-acceptance
/// threshold min_j accept^j[s^j] > 1/2 (strictly, with 1e-9 slack).
ICProtocol make_protocol(GptSystem system_ab, std::vector<Vec> states,
                         std::vector<Vec> accepts);

struct CheatOptions {
  double solve_tol = 1e-9;
  int max_iter = 200000;
  bool compute_alice_exact = true;
  int validation_samples = 200;
  std::uint64_t validation_seed = 20260801ULL;
};

/// min_j accept^j[s^j]; throws InvalidProtocol when not above 1/2 (a random
/// guess already achieves 1/2).
double honest_alpha(const ICProtocol& p);

struct BobPrimalResult {
  ConeProgram program;
  ConeSolution solution;
  std::optional<Vec> slater_point;  // the uniform effect U_B / n
};

/// Bob's discrimination program over measurements (M^1..M^n) on his reduced
/// states rho^j = u_A[s^j].
BobPrimalResult bob_cheat_primal(const ICProtocol& p,
                                 const CheatOptions& opts = {});

struct BobDualResult {
  ConeProgram program;   // the mechanical dual of Bob's primal
  ConeSolution solution;
  double value = 0.0;    // P_B* from the dual side
  Vec x;                 // attained minimizer: x - rho^j/n in K_B for all j
  double feasibility_violation = 0.0;  // max_j dist(x - rho^j/n, K_B)
};

/// Solves the dual form directly. Requires the No-Restriction Hypothesis to
/// hold on Bob's factor (validated by sampling); otherwise throws
/// TheoremInapplicable — the Discussion's restricted-effect regime.
BobDualResult bob_cheat_dual(const ICProtocol& p,
                             const CheatOptions& opts = {});

struct AliceStrategy {
  std::vector<Vec> chi;           // chi^j = (s^j + t^j) / (u_B[x] n)
  double value = 0.0;             // (1/n) sum_j accept^j[chi^j], or the
                                  // analytic bound for non-quantum theories
  Vec x_prime;                    // normalized dual optimizer on B
  bool steering_available = false;
  std::vector<SteeringMap> maps;  // one per j (quantum kinds only)
  double max_steering_residual = 0.0;
  double max_marginal_residual = 0.0;   // || u_A[chi^j] - x' ||
  double min_accept_on_dilation = 0.0;  // min_j accept^j[t^j] (>= 0)
  double purify_choice_spread = 0.0;    // value change across purified chi^k
  std::string label;              // "constructed" or "postulate-assumed"
};

/// Builds Alice's cheating strategy from an optimal dual vector x: lifts x
/// to exact dual feasibility, forms r^j = n x - rho^j, dilates, assembles
/// chi^j, and for quantum kinds purifies chi^1 and computes the steering
/// map to every chi^j. For non-quantum theories the chi^j are still
/// constructed (product dilations) but the reported value is the analytic
/// bound alpha / (n u_B[x]) and steering maps are unavailable.
AliceStrategy alice_strategy(const ICProtocol& p, const Vec& dual_x,
                             const CheatOptions& opts = {});

/// Exact P_A* for quantum-kind protocols: optimize over families chi^1..n
/// with a common B-marginal sigma, u[sigma] = 1.
double alice_exact_quantum(const ICProtocol& p, const CheatOptions& opts = {});

struct CheatReport {
  double alpha = 0.0;
  double pb_primal = 0.0;
  double pb_dual = 0.0;
  Vec dual_optimal_x;
  double alice_value = 0.0;
  std::optional<double> alice_exact;
  bool product_bound_check = false;  // alice_value * pb_dual >= alpha/n - 1e-6
  bool strong_duality_ok = false;    // |pb_primal - pb_dual| <= 1e-5
  bool sandwich_ok = true;           // alice_value <= alice_exact + 1e-6
  bool steering_ok = true;           // residuals <= 1e-8 (quantum kinds)
  std::string alice_label;
  std::string failure;               // empty when everything passed

  // diagnostics
  Residuals primal_residuals;
  Residuals dual_residuals;
  int primal_iterations = 0;
  int dual_iterations = 0;
  double dual_feasibility_violation = 0.0;
  double max_steering_residual = 0.0;
  double max_marginal_residual = 0.0;
  double min_accept_on_dilation = 0.0;

  bool all_pass() const {
    return product_bound_check && strong_duality_ok && sandwich_ok &&
           steering_ok && failure.empty();
  }
};

/// End-to-end verification of the trade-off P_A* . P_B* >= alpha / n on one
/// protocol. Solver failures and inapplicable-theorem conditions propagate
/// as exceptions; a violated bound is reported, never silently passed.
CheatReport verify_tradeoff(const ICProtocol& p, const CheatOptions& opts = {});

}  // namespace gptcone
