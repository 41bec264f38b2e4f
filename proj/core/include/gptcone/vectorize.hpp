// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include "gptcone/types.hpp"

namespace gptcone {

// Fixed orthonormal vectorizations of Hermitian / real-symmetric matrices.
// Coordinates are real and the Euclidean dot product of two coordinate
// vectors equals the trace inner product tr(M N) of the matrices they
// represent. The basis order is pinned so that serialized vectors and test
// fixtures are bit-reproducible:
//
//   Hermitian, dim n  ->  R^(n*n)
//     [0 .. n-1]        scaled diagonal matrices in generalized Gell-Mann
//                       form: I/sqrt(n) first, then for k = 1..n-1 the
//                       traceless diag(1,..,1,-k,0,..)/sqrt(k(k+1)).
//     [n .. n+P-1]      symmetric pairs (E_ij + E_ji)/sqrt(2), i<j in
//                       lexicographic order, P = n(n-1)/2.
//     [n+P .. n+2P-1]   antisymmetric pairs i(E_ij - E_ji)/sqrt(2), same
//                       order.
//
//   Symmetric, dim n  ->  R^(n(n+1)/2)
//     [0 .. n-1]        plain diagonal entries E_ii.
//     [n .. n+P-1]      symmetric pairs (E_ij + E_ji)/sqrt(2).

int herm_vec_dim(int n);
int sym_vec_dim(int n);

/// Matrix dimension from an ambient dimension (inverse of the above);
/// throws ContractViolation when the ambient dimension is not of the
/// required form.
int herm_mat_dim(int ambient);
int sym_mat_dim(int ambient);

Vec herm_vec(const CMat& m);
CMat herm_mat(const Vec& v);

Vec sym_vec(const Mat& m);
Mat sym_mat(const Vec& v);

/// tr_A or tr_B of a (da*db) x (da*db) matrix with A as the leading factor.
CMat partial_trace(const CMat& m, int da, int db, bool keep_b);
Mat partial_trace(const Mat& m, int da, int db, bool keep_b);

CMat kron(const CMat& a, const CMat& b);
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

}  // namespace gptcone
