// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gptcone/cones.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

class GptSystem;

/// How a composite system was formed; retained so that marginals know the
/// factor structure.
struct CompositeInfo {
  std::shared_ptr<const GptSystem> a;
  std::shared_ptr<const GptSystem> b;
  ComposeRule rule;
};

enum class Keep { kA, kB };

/// A system triple (state cone, effect cone, unit effect). The unit effect
/// must be strictly interior to the effect cone and the two cones must live
/// in inner-product spaces of equal dimension.
class GptSystem {
 public:
  GptSystem(ConeSpec state_cone, ConeSpec effect_cone, Vec unit_effect,
            std::string label);

  const ConeSpec& state_cone() const { return state_cone_; }
  const ConeSpec& effect_cone() const { return effect_cone_; }
  const Vec& unit_effect() const { return unit_effect_; }
  const std::string& label() const { return label_; }

  bool is_composite() const { return composite_ != nullptr; }
  const CompositeInfo& composite() const;

  /// True for PsdReal / PsdComplex state cones (the kinds with a concrete
  /// purification construction).
  bool quantum_kind() const;

 private:
  friend GptSystem compose(const GptSystem&, const GptSystem&, ComposeRule);

  ConeSpec state_cone_;
  ConeSpec effect_cone_;
  Vec unit_effect_;
  std::string label_;
  std::shared_ptr<const CompositeInfo> composite_;
};

struct GptState {
  GptSystem system;
  Vec vec;
};

struct GptMeasurement {
  GptSystem system;
  std::vector<Vec> effects;
};

/// Outcome probability e[s] = <e, s> (Frechet-Riesz vectorized form).
double evaluate(const Vec& effect, const GptState& state);

/// Physical iff in the state cone with unit normalization.
bool is_physical(const GptState& state, double tol = kMembershipTol);

/// Effects must lie in the effect cone and sum to the unit effect.
bool is_valid_measurement(const GptMeasurement& m, double tol = 1e-10);

struct ValidationReport {
  bool dims_equal = false;         // Dim(K) == Dim(E)
  bool effects_in_state_dual = false;
  bool states_in_effect_dual = false;
  bool unit_interior = false;
  bool no_restriction = false;     // E == K* on samples, both inclusions
  int samples = 0;
  std::string detail;

  /// Requirements (i)-(iii); No-Restriction is reported separately since a
  /// system may be valid yet restricted.
  bool valid() const {
    return dims_equal && effects_in_state_dual && states_in_effect_dual &&
           unit_interior;
  }
  bool all_ok() const { return valid() && no_restriction; }
};

/// Sample-based validation of the triple's requirements, including the
/// No-Restriction check that flags restricted-effect systems.
ValidationReport validate_system(const GptSystem& sys, int samples = 200,
                                 double tol = kMembershipTol,
                                 std::uint64_t seed = 20260801ULL);

/// Composite system: state cones compose under `rule`, effect cones under
/// the dual rule, and the unit effect is the tensor of the units.
GptSystem compose(const GptSystem& a, const GptSystem& b, ComposeRule rule);

/// Tensor product state (or effect) of a composite system.
GptState tensor_state(const GptSystem& ab, const GptState& sa,
                      const GptState& sb);
Vec tensor_effect(const GptSystem& ab, const Vec& ea, const Vec& eb);

/// Marginal by evaluating the unit effect on the discarded factor. For
/// quantum kinds this is the matrix partial trace.
GptState marginal(const GptState& s, Keep keep);

/// Marginal of a bare composite vector (used where no GptState wrapping is
/// wanted, e.g. inside the commitment pipeline).
Vec marginal_vec(const GptSystem& ab, const Vec& v, Keep keep);

// presets
GptSystem quantum_system(int d);
GptSystem real_quantum_system(int d);
GptSystem classical_system(int d);
GptSystem gbit_system();

/// The Discussion-style counterexample: quantum state cone but an effect
/// cone restricted to multiples of the unit. Fails No-Restriction.
GptSystem restricted_quantum_system(int d);

}  // namespace gptcone
