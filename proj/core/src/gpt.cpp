// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#include "gptcone/gpt.hpp"

#include <cmath>
#include <utility>

#include "gptcone/errors.hpp"
#include "gptcone/vectorize.hpp"

namespace gptcone {

GptSystem::GptSystem(ConeSpec state_cone, ConeSpec effect_cone,
                     Vec unit_effect, std::string label)
    : state_cone_(std::move(state_cone)),
      effect_cone_(std::move(effect_cone)),
      unit_effect_(std::move(unit_effect)),
      label_(std::move(label)) {
  if (state_cone_.ambient_dim() != effect_cone_.ambient_dim())
    throw ContractViolation(
        "GptSystem: state and effect cones must have equal ambient "
        "dimension (tomography)");
  if (unit_effect_.size() != effect_cone_.ambient_dim())
    throw ContractViolation("GptSystem: unit effect has wrong dimension");
}

const CompositeInfo& GptSystem::composite() const {
  if (!composite_)
    throw ContractViolation("GptSystem: '" + label_ +
                            "' is not a recognized composite");
  return *composite_;
}

bool GptSystem::quantum_kind() const {
  return state_cone_.kind() == ConeKind::kPsdReal ||
         state_cone_.kind() == ConeKind::kPsdComplex;
}

double evaluate(const Vec& effect, const GptState& state) {
  if (effect.size() != state.vec.size())
    throw ContractViolation("evaluate: effect/state dimension mismatch");
  return effect.dot(state.vec);
}

bool is_physical(const GptState& state, double tol) {
  if (!contains(state.system.state_cone(), state.vec, tol)) return false;
  return std::abs(state.system.unit_effect().dot(state.vec) - 1.0) <= tol;
}

bool is_valid_measurement(const GptMeasurement& m, double tol) {
  Vec sum = Vec::Zero(m.system.effect_cone().ambient_dim());
  for (const auto& e : m.effects) {
    if (!contains(m.system.effect_cone(), e, kMembershipTol)) return false;
    sum += e;
  }
  return (sum - m.system.unit_effect()).lpNorm<Eigen::Infinity>() <= tol;
}

ValidationReport validate_system(const GptSystem& sys, int samples, double tol,
                                 std::uint64_t seed) {
  ValidationReport rep;
  rep.samples = samples;
  rep.dims_equal =
      sys.state_cone().ambient_dim() == sys.effect_cone().ambient_dim();

  const double margin = interior_margin(sys.effect_cone(), sys.unit_effect());
  rep.unit_interior = margin > 1e-9 * (1.0 + sys.unit_effect().norm());

  const ConeSpec state_dual = dual_cone(sys.state_cone());
  const ConeSpec effect_dual = dual_cone(sys.effect_cone());

  Rng rng(seed);
  const auto unit_sample = [&](const ConeSpec& cone) {
    Vec v = sample_point(cone, rng);
    const double nrm = v.norm();
    return nrm > 0 ? Vec(v / nrm) : v;
  };

  rep.effects_in_state_dual = true;
  rep.states_in_effect_dual = true;
  rep.no_restriction = true;
  for (int i = 0; i < samples; ++i) {
    const Vec e = unit_sample(sys.effect_cone());
    const Vec s = unit_sample(sys.state_cone());
    const Vec k_dual = unit_sample(state_dual);
    if (!contains(state_dual, e, tol)) rep.effects_in_state_dual = false;
    if (!contains(effect_dual, s, tol)) rep.states_in_effect_dual = false;
    // No-Restriction needs both inclusions E subset K* and K* subset E
    if (!contains(sys.effect_cone(), k_dual, tol)) rep.no_restriction = false;
  }
  rep.no_restriction = rep.no_restriction && rep.effects_in_state_dual;
  if (!rep.no_restriction)
    rep.detail = "effect cone differs from the state cone's dual on samples";
  return rep;
}

namespace {

ComposeRule dual_rule(ComposeRule r) {
  switch (r) {
    case ComposeRule::kMin: return ComposeRule::kMax;
    case ComposeRule::kMax: return ComposeRule::kMin;
    case ComposeRule::kQuantum: return ComposeRule::kQuantum;
  }
  throw ContractViolation("dual_rule: unknown rule");
}

}  // namespace

GptSystem compose(const GptSystem& a, const GptSystem& b, ComposeRule rule) {
  ConeSpec state = tensor_compose(a.state_cone(), b.state_cone(), rule);
  ConeSpec effect =
      tensor_compose(a.effect_cone(), b.effect_cone(), dual_rule(rule));
  Vec unit = tensor_vector(a.effect_cone(), b.effect_cone(), effect,
                           a.unit_effect(), b.unit_effect());
  GptSystem sys(std::move(state), std::move(effect), std::move(unit),
                a.label() + " x " + b.label());
  sys.composite_ = std::make_shared<CompositeInfo>(
      CompositeInfo{std::make_shared<GptSystem>(a),
                    std::make_shared<GptSystem>(b), rule});
  return sys;
}

GptState tensor_state(const GptSystem& ab, const GptState& sa,
                      const GptState& sb) {
  const auto& info = ab.composite();
  return GptState{ab, tensor_vector(info.a->state_cone(), info.b->state_cone(),
                                    ab.state_cone(), sa.vec, sb.vec)};
}

Vec tensor_effect(const GptSystem& ab, const Vec& ea, const Vec& eb) {
  const auto& info = ab.composite();
  return tensor_vector(info.a->effect_cone(), info.b->effect_cone(),
                       ab.effect_cone(), ea, eb);
}

Vec marginal_vec(const GptSystem& ab, const Vec& v, Keep keep) {
  const auto& info = ab.composite();
  const GptSystem& fa = *info.a;
  const GptSystem& fb = *info.b;
  if (v.size() != ab.state_cone().ambient_dim())
    throw ContractViolation("marginal: vector dimension mismatch");

  const ConeKind k = ab.state_cone().kind();
  if (k == ConeKind::kPsdComplex) {
    const int da = fa.state_cone().matrix_dim();
    const int db = fb.state_cone().matrix_dim();
    return herm_vec(partial_trace(herm_mat(v), da, db, keep == Keep::kB));
  }
  if (k == ConeKind::kPsdReal) {
    const int da = fa.state_cone().matrix_dim();
    const int db = fb.state_cone().matrix_dim();
    return sym_vec(partial_trace(sym_mat(v), da, db, keep == Keep::kB));
  }
  // coordinate kinds: the composite coordinates are the Kronecker layout,
  // so evaluating the discarded unit is a reshaped contraction
  const int na = fa.state_cone().ambient_dim();
  const int nb = fb.state_cone().ambient_dim();
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      s(v.data(), na, nb);
  if (keep == Keep::kB) return s.transpose() * fa.unit_effect();
  return s * fb.unit_effect();
}

GptState marginal(const GptState& s, Keep keep) {
  const auto& info = s.system.composite();
  Vec m = marginal_vec(s.system, s.vec, keep);
  return GptState{keep == Keep::kA ? *info.a : *info.b, std::move(m)};
}

// ---------------------------------------------------------------------------
// presets

GptSystem quantum_system(int d) {
  if (d < 1) throw ContractViolation("quantum_system: d >= 1 required");
  return GptSystem(ConeSpec::psd_complex(d), ConeSpec::psd_complex(d),
                   herm_vec(CMat::Identity(d, d)),
                   "quantum(" + std::to_string(d) + ")");
}

GptSystem real_quantum_system(int d) {
  if (d < 1) throw ContractViolation("real_quantum_system: d >= 1 required");
  return GptSystem(ConeSpec::psd_real(d), ConeSpec::psd_real(d),
                   sym_vec(Mat::Identity(d, d)),
                   "real_quantum(" + std::to_string(d) + ")");
}

GptSystem classical_system(int d) {
  if (d < 1) throw ContractViolation("classical_system: d >= 1 required");
  return GptSystem(ConeSpec::orthant(d), ConeSpec::orthant(d), Vec::Ones(d),
                   "classical(" + std::to_string(d) + ")");
}

GptSystem gbit_system() {
  // square state space at unit height, extremal states (1, +-1, +-1);
  // the effect cone is its dual, generated by (1, +-1, 0) and (1, 0, +-1)
  Mat states(3, 4);
  states.col(0) << 1, 1, 1;
  states.col(1) << 1, 1, -1;
  states.col(2) << 1, -1, 1;
  states.col(3) << 1, -1, -1;
  Mat effects(3, 4);
  effects.col(0) << 1, 1, 0;
  effects.col(1) << 1, -1, 0;
  effects.col(2) << 1, 0, 1;
  effects.col(3) << 1, 0, -1;
  Vec unit(3);
  unit << 1, 0, 0;
  return GptSystem(ConeSpec::polyhedral_v(states),
                   ConeSpec::polyhedral_v(effects), unit, "gbit");
}

GptSystem restricted_quantum_system(int d) {
  if (d < 1)
    throw ContractViolation("restricted_quantum_system: d >= 1 required");
  const Vec unit = herm_vec(CMat::Identity(d, d));
  Mat gens(unit.size(), 1);
  gens.col(0) = unit;
  return GptSystem(ConeSpec::psd_complex(d), ConeSpec::polyhedral_v(gens),
                   unit, "restricted_quantum(" + std::to_string(d) + ")");
}

}  // namespace gptcone
