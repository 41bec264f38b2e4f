// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/commitment.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gptcone/errors.hpp"
#include "gptcone/vectorize.hpp"

namespace gptcone {

namespace {

constexpr double kAlphaSlack = 1e-9;       // alpha must exceed 1/2 + this
constexpr double kStrongDualityTol = 1e-5;
constexpr double kBoundTol = 1e-6;
constexpr double kSteeringTol = 1e-8;

int psd_rank(const ConeSpec& cone, const Vec& v) {
  Vec lam;
  if (cone.kind() == ConeKind::kPsdComplex)
    lam = Eigen::SelfAdjointEigenSolver<CMat>(herm_mat(v)).eigenvalues();
  else if (cone.kind() == ConeKind::kPsdReal)
    lam = Eigen::SelfAdjointEigenSolver<Mat>(sym_mat(v)).eigenvalues();
  else
    throw ContractViolation("psd_rank: not a PSD cone");
  int r = 0;
  for (int i = 0; i < lam.size(); ++i)
    if (lam[i] > kRankTol) ++r;
  return r;
}

}  // namespace

ICProtocol make_protocol(GptSystem system_ab, std::vector<Vec> states,
                         std::vector<Vec> accepts) {
  if (!system_ab.is_composite())
    throw ContractViolation("make_protocol: system must be a composite A x B");
  const int n = static_cast<int>(states.size());
  if (n < 2)
    throw InvalidProtocol("make_protocol: need at least 2 committed states");
  if (static_cast<int>(accepts.size()) != n)
    throw InvalidProtocol(
        "make_protocol: committed states and accept effects must pair up");

  ICProtocol p{n, std::move(system_ab), std::move(states), std::move(accepts)};
  const Vec& unit = p.system_ab.unit_effect();
  for (int j = 0; j < n; ++j) {
    const GptState s{p.system_ab, p.committed_states[j]};
    if (!is_physical(s))
      throw InvalidProtocol("make_protocol: committed state " +
                            std::to_string(j) + " is not physical");
    GptMeasurement m{p.system_ab,
                     {p.accept_effects[j], unit - p.accept_effects[j]}};
    if (!is_valid_measurement(m))
      throw InvalidProtocol("make_protocol: accept effect " +
                            std::to_string(j) +
                            " is not a valid two-outcome measurement");
  }
  honest_alpha(p);  // throws when the acceptance threshold is too low
  return p;
}

double honest_alpha(const ICProtocol& p) {
  double alpha = 1.0;
  for (int j = 0; j < p.n; ++j)
    alpha = std::min(alpha, p.accept_effects[j].dot(p.committed_states[j]));
  if (alpha < 0.5 + kAlphaSlack)
    throw InvalidProtocol(
        "honest_alpha: min_j accept^j[s^j] = " + std::to_string(alpha) +
        " does not exceed 1/2; a random guess already performs this well");
  return alpha;
}

namespace {

ConeProgram build_bob_primal(const ICProtocol& p) {
  const GptSystem& b_sys = p.system_b();
  const int m = b_sys.state_cone().ambient_dim();
  const int n = p.n;

  Mat phi = Mat::Zero(m, n * m);
  for (int j = 0; j < n; ++j)
    phi.block(0, j * m, m, m) = Mat::Identity(m, m);
  Vec c(n * m);
  for (int j = 0; j < n; ++j)
    c.segment(j * m, m) =
        marginal_vec(p.system_ab, p.committed_states[j], Keep::kB) / n;
  std::vector<ConeSpec> factors(n, b_sys.effect_cone());
  return ConeProgram(std::move(phi), b_sys.unit_effect(), std::move(c),
                     ConeSpec::product(std::move(factors)), Sense::kSup);
}

void require_optimal(const ConeSolution& sol, const char* who) {
  if (sol.status == SolveStatus::kOptimal) return;
  const double worst = std::max(
      {sol.residuals.primal, sol.residuals.dual, sol.residuals.gap});
  throw NumericalFailure(
      std::string(who) + ": solver did not reach optimality (status " +
          (sol.status == SolveStatus::kInfeasibleDetected ? "infeasible"
                                                          : "max_iterations") +
          ")",
      worst);
}

}  // namespace

BobPrimalResult bob_cheat_primal(const ICProtocol& p,
                                 const CheatOptions& opts) {
  ConeProgram prog = build_bob_primal(p);
  std::optional<Vec> slater = check_slater(prog);
  ConeSolution sol = solve(prog, opts.solve_tol, opts.max_iter);
  require_optimal(sol, "bob_cheat_primal");
  return BobPrimalResult{std::move(prog), std::move(sol), std::move(slater)};
}

BobDualResult bob_cheat_dual(const ICProtocol& p, const CheatOptions& opts) {
  const GptSystem& b_sys = p.system_b();
  const ValidationReport rep = validate_system(
      b_sys, opts.validation_samples, kMembershipTol, opts.validation_seed);
  if (!rep.no_restriction)
    throw TheoremInapplicable(
        "bob_cheat_dual: No-Restriction fails on Bob's factor ('" +
        b_sys.label() +
        "'); the impossibility theorem does not apply (restricted-effect "
        "regime)");

  ConeProgram dual_prog = dualize(build_bob_primal(p));
  ConeSolution sol = solve(dual_prog, opts.solve_tol, opts.max_iter);
  require_optimal(sol, "bob_cheat_dual");

  const int m = b_sys.state_cone().ambient_dim();
  BobDualResult res{std::move(dual_prog), std::move(sol), 0.0, Vec(), 0.0};
  res.value = res.solution.primal_value;
  res.x = res.solution.x.head(m);
  for (int j = 0; j < p.n; ++j) {
    const Vec slack =
        res.x - marginal_vec(p.system_ab, p.committed_states[j], Keep::kB) / p.n;
    const double viol = (slack - project(b_sys.state_cone(), slack)).norm();
    res.feasibility_violation = std::max(res.feasibility_violation, viol);
  }
  return res;
}

AliceStrategy alice_strategy(const ICProtocol& p, const Vec& dual_x,
                             const CheatOptions& opts) {
  const GptSystem& a_sys = p.system_a();
  const GptSystem& b_sys = p.system_b();
  const ConeSpec& kb = b_sys.state_cone();
  const Vec& ub = b_sys.unit_effect();
  const double alpha = honest_alpha(p);
  const int n = p.n;
  const bool quantum = p.system_ab.quantum_kind();

  std::vector<Vec> rho(n);
  for (int j = 0; j < n; ++j)
    rho[j] = marginal_vec(p.system_ab, p.committed_states[j], Keep::kB);

  // Lift x minimally along the unit so that x - rho^j/n lies in K_B exactly;
  // for quantum kinds adding t * unit shifts every eigenvalue by t.
  Vec x = dual_x;
  if (quantum) {
    double lift = 0.0;
    for (int j = 0; j < n; ++j)
      lift = std::max(lift, -interior_margin(kb, Vec(x - rho[j] / n)));
    if (lift > 0) x += lift * ub;
  }

  const double denom = ub.dot(x);
  if (denom <= 0)
    throw ContractViolation("alice_strategy: u_B[x] must be positive");
  AliceStrategy out;
  out.x_prime = x / denom;

  // sigma_A: canonical physical state on A for product dilations
  const Vec ip_a = interior_point(a_sys.state_cone());
  const Vec sigma_a = ip_a / a_sys.unit_effect().dot(ip_a);

  double constructed_value = 0.0;
  out.min_accept_on_dilation = std::numeric_limits<double>::infinity();
  out.chi.resize(n);
  for (int j = 0; j < n; ++j) {
    Vec r = x * n - rho[j];
    Vec t;
    if (quantum && psd_rank(kb, r) <= a_sys.state_cone().matrix_dim()) {
      t = dilate(r, p.system_ab);
    } else {
      // any dilation works; the product one exists in every composite
      if (!quantum) r = project(kb, r);
      t = tensor_vector(a_sys.state_cone(), kb, p.system_ab.state_cone(),
                        sigma_a, r);
    }
    out.chi[j] = (p.committed_states[j] + t) / (denom * n);
    constructed_value += p.accept_effects[j].dot(out.chi[j]) / n;
    out.min_accept_on_dilation =
        std::min(out.min_accept_on_dilation, p.accept_effects[j].dot(t));
    const double marg_resid =
        (marginal_vec(p.system_ab, out.chi[j], Keep::kB) - out.x_prime).norm();
    out.max_marginal_residual = std::max(out.max_marginal_residual, marg_resid);
  }

  if (quantum) {
    out.value = constructed_value;
    if (out.value < alpha / (n * denom) - 1e-8)
      throw NumericalFailure(
          "alice_strategy: constructed value fell below the guaranteed "
          "alpha/(n u_B[x]) bound",
          alpha / (n * denom) - out.value);

    int dc = 1;
    for (int j = 0; j < n; ++j)
      dc = std::max(dc, psd_rank(p.system_ab.state_cone(), out.chi[j]));

    const Purification global =
        purify(GptState{p.system_ab, out.chi[0]}, dc);
    for (int j = 0; j < n; ++j) {
      SteeringMap map =
          steering_transform(global, GptState{p.system_ab, out.chi[j]}, j);
      const GptState steered = apply_steering(map, global);
      out.max_steering_residual = std::max(
          out.max_steering_residual, (steered.vec - out.chi[j]).norm());
      out.maps.push_back(std::move(map));
    }
    out.steering_available = true;
    out.label = "constructed";

    // the choice of which chi^k to purify must not affect the achieved value
    for (int k = 1; k < n; ++k) {
      const Purification alt = purify(GptState{p.system_ab, out.chi[k]}, dc);
      double value_k = 0.0;
      for (int j = 0; j < n; ++j) {
        const SteeringMap map =
            steering_transform(alt, GptState{p.system_ab, out.chi[j]}, j);
        value_k +=
            p.accept_effects[j].dot(apply_steering(map, alt).vec) / n;
      }
      out.purify_choice_spread =
          std::max(out.purify_choice_spread, std::abs(value_k - out.value));
    }
  } else {
    // Purification Postulate assumed, not constructed: report the analytic
    // lower bound the paper's argument guarantees.
    out.value = alpha / (n * denom);
    out.steering_available = false;
    out.label = "postulate-assumed";
  }
  return out;
}

double alice_exact_quantum(const ICProtocol& p, const CheatOptions& opts) {
  if (!p.system_ab.quantum_kind())
    throw UnsupportedTheory(
        "alice_exact_quantum: exact cheating program is only formulated for "
        "quantum-kind composites");
  const GptSystem& b_sys = p.system_b();
  const int nab = p.system_ab.state_cone().ambient_dim();
  const int nb = b_sys.state_cone().ambient_dim();
  const int n = p.n;

  // marginal map as a matrix: column k = u_A-marginal of basis vector e_k
  Mat pt(nb, nab);
  for (int k = 0; k < nab; ++k) {
    Vec e = Vec::Zero(nab);
    e[k] = 1.0;
    pt.col(k) = marginal_vec(p.system_ab, e, Keep::kB);
  }

  const int nvar = n * nab + nb;
  Mat phi = Mat::Zero(n * nb + 1, nvar);
  Vec b = Vec::Zero(n * nb + 1);
  for (int j = 0; j < n; ++j) {
    phi.block(j * nb, j * nab, nb, nab) = pt;
    phi.block(j * nb, n * nab, nb, nb) = -Mat::Identity(nb, nb);
  }
  phi.block(n * nb, n * nab, 1, nb) = b_sys.unit_effect().transpose();
  b[n * nb] = 1.0;

  Vec c = Vec::Zero(nvar);
  for (int j = 0; j < n; ++j) c.segment(j * nab, nab) = p.accept_effects[j] / n;

  std::vector<ConeSpec> factors(n, p.system_ab.state_cone());
  factors.push_back(b_sys.state_cone());
  ConeProgram prog(std::move(phi), std::move(b), std::move(c),
                   ConeSpec::product(std::move(factors)), Sense::kSup);
  ConeSolution sol = solve(prog, opts.solve_tol, opts.max_iter);
  require_optimal(sol, "alice_exact_quantum");
  return sol.primal_value;
}

CheatReport verify_tradeoff(const ICProtocol& p, const CheatOptions& opts) {
  CheatReport rep;
  rep.alpha = honest_alpha(p);

  BobPrimalResult primal = bob_cheat_primal(p, opts);
  BobDualResult dual = bob_cheat_dual(p, opts);
  rep.pb_primal = primal.solution.primal_value;
  rep.pb_dual = dual.value;
  rep.dual_optimal_x = dual.x;
  rep.primal_residuals = primal.solution.residuals;
  rep.dual_residuals = dual.solution.residuals;
  rep.primal_iterations = primal.solution.iterations;
  rep.dual_iterations = dual.solution.iterations;
  rep.dual_feasibility_violation = dual.feasibility_violation;
  rep.strong_duality_ok =
      std::abs(rep.pb_primal - rep.pb_dual) <= kStrongDualityTol;

  try {
    AliceStrategy alice = alice_strategy(p, dual.x, opts);
    rep.alice_value = alice.value;
    rep.alice_label = alice.label;
    rep.max_steering_residual = alice.max_steering_residual;
    rep.max_marginal_residual = alice.max_marginal_residual;
    rep.min_accept_on_dilation = alice.min_accept_on_dilation;
    if (p.system_ab.quantum_kind()) {
      rep.steering_ok = alice.steering_available &&
                        alice.max_steering_residual <= kSteeringTol &&
                        alice.max_marginal_residual <= kSteeringTol;
    }
    if (p.system_ab.quantum_kind() && opts.compute_alice_exact) {
      rep.alice_exact = alice_exact_quantum(p, opts);
      rep.sandwich_ok = rep.alice_value <= *rep.alice_exact + kBoundTol;
    }
    rep.product_bound_check =
        rep.alice_value * rep.pb_dual >= rep.alpha / p.n - kBoundTol;
  } catch (const Error& e) {
    rep.failure = e.what();
    rep.product_bound_check = false;
  }
  if (rep.failure.empty() && !rep.strong_duality_ok)
    rep.failure = "primal/dual values differ beyond 1e-5";
  if (rep.failure.empty() && !rep.product_bound_check)
    rep.failure = "trade-off bound alpha/n violated";
  if (rep.failure.empty() && !rep.sandwich_ok)
    rep.failure = "constructed value exceeds the exact optimum";
  if (rep.failure.empty() && !rep.steering_ok)
    rep.failure = "steering residual above 1e-8";
  return rep;
}

}  // namespace gptcone
