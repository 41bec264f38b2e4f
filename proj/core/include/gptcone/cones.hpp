// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "gptcone/rng.hpp"
#include "gptcone/types.hpp"

namespace gptcone {

// Concrete closed convex cones in finite-dimensional real inner-product
// spaces. PSD kinds live in their fixed orthonormal vectorization (see
// vectorize.hpp) so the coordinate dot product is the trace inner product.
//
// Free and Zero are plumbing kinds: they never model a physical state or
// effect cone, but they are required to express the mechanical dual of a
// cone program as a first-class program (the dual variable Y is
// unconstrained).

enum class ConeKind {
  kOrthant,
  kPsdReal,
  kPsdComplex,
  kPolyhedralV,  // cone hull of finitely many generators (columns)
  kPolyhedralH,  // intersection of homogeneous halfspaces h_i . x >= 0 (rows)
  kProduct,
  kFree,
  kZero,
};

enum class ComposeRule { kMin, kMax, kQuantum };

/// Hard limits for double-description conversions; exceeding them is an
/// UnsupportedScale error, never a silent slow path.
inline constexpr int kDdMaxDim = 10;
inline constexpr int kDdMaxRows = 64;

/// Cap and tolerance of the projected-gradient nonnegative least squares
/// iteration used for polyhedral projections.
inline constexpr int kNnlsMaxIter = 10000;
inline constexpr double kNnlsTol = 1e-9;

class ConeSpec {
 public:
  static ConeSpec orthant(int dim);
  static ConeSpec psd_real(int n);
  static ConeSpec psd_complex(int n);
  /// Generators are the nonzero columns of `generators`.
  static ConeSpec polyhedral_v(const Mat& generators);
  /// Halfspaces are the nonzero rows of `inequalities`: {x : H x >= 0}.
  static ConeSpec polyhedral_h(const Mat& inequalities);
  static ConeSpec product(std::vector<ConeSpec> factors);
  static ConeSpec free(int dim);
  static ConeSpec zero(int dim);

  ConeKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }

  /// Matrix dimension n for PSD kinds.
  int matrix_dim() const;
  const Mat& generators() const;
  const Mat& inequalities() const;
  const std::vector<ConeSpec>& factors() const;

  bool operator==(const ConeSpec& other) const;

 private:
  ConeSpec() = default;

  ConeKind kind_ = ConeKind::kOrthant;
  int ambient_dim_ = 0;
  int matrix_dim_ = 0;          // PSD kinds
  Mat data_;                    // generators (columns) or inequalities (rows)
  std::vector<ConeSpec> factors_;
};

/// True iff the Euclidean distance from v to the cone (measured via
/// project) is at most tol.
bool contains(const ConeSpec& cone, const Vec& v, double tol = kMembershipTol);

/// Euclidean-nearest point of the cone. Idempotent and nonexpansive.
/// Polyhedral kinds use projected-gradient NNLS and throw NumericalFailure
/// (with the residual) if the iteration cap is hit.
Vec project(const ConeSpec& cone, const Vec& v);

/// The dual cone under the standard inner product. Orthant and PSD kinds
/// are self-dual; PolyhedralV(G) maps to PolyhedralH(G); PolyhedralH(H)
/// maps to PolyhedralV over the extreme rays among the rows of H (the
/// double-description direction); Product maps factorwise; Free and Zero
/// exchange.
ConeSpec dual_cone(const ConeSpec& cone);

/// A canonical strictly interior point: all-ones for Orthant, the identity
/// vectorization for PSD kinds, the mean of the generators for PolyhedralV,
/// a damped-Newton analytic-center approximation for PolyhedralH.
Vec interior_point(const ConeSpec& cone);

/// Signed distance-like interiority margin of v: positive iff v is strictly
/// inside the cone (min coordinate, min eigenvalue, or min normalized
/// inequality value depending on kind). Used by Slater checks.
double interior_margin(const ConeSpec& cone, const Vec& v);

/// Composite cone of two factors under the given rule. kMin needs finitely
/// generated factors and returns their generator tensor hull; kMax is the
/// dual of the min composite of the duals; kQuantum requires both factors
/// PsdReal or both PsdComplex and returns the PSD cone on the tensor
/// product space. Orthant x Orthant collapses to Orthant under kMin/kMax.
ConeSpec tensor_compose(const ConeSpec& a, const ConeSpec& b,
                        ComposeRule rule);

/// Tensor product of cone vectors: the composite coordinates of the
/// product element (matrix Kronecker product for PSD kinds, coordinate
/// Kronecker product for the rest). The composite spec fixes the target
/// vectorization.
Vec tensor_vector(const ConeSpec& a, const ConeSpec& b, const ConeSpec& ab,
                  const Vec& va, const Vec& vb);

/// Extreme rays (as unit columns) of a polyhedral cone given in either
/// representation, via double description. Subject to the kDdMax limits.
Mat extreme_rays(const ConeSpec& cone);

/// Deterministic random element of the cone (used by sampling validators).
Vec sample_point(const ConeSpec& cone, Rng& rng);

namespace detail {

// Projected-gradient (FISTA) nonnegative least squares:
//   min_{c >= 0} || G c - v ||^2.
// Returns the coefficient vector; `projection` (if non-null) receives G c.
Vec nnls(const Mat& g, const Vec& v, Vec* projection, int max_iter = kNnlsMaxIter,
         double tol = kNnlsTol);

// Extreme rays of {x : H x >= 0} (double description, incremental).
Mat dd_rays(const Mat& h);

}  // namespace detail

}  // namespace gptcone
