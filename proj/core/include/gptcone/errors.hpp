// gptcone - cone programming toolkit for generalised probabilistic theories
// Copyright 2026 gptcone Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gptcone {

/// Base class for all gptcone errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition (dimension mismatch, invalid
/// field, inconsistent data).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// An iterative routine failed to converge; carries the final residual.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Input exceeds a hard size limit (double description, vertex enumeration).
class UnsupportedScale : public Error {
 public:
  explicit UnsupportedScale(const std::string& what) : Error(what) {}
};

/// Requested cone/rule combination is not defined (e.g. min tensor of
/// non-polyhedral factors).
class UnsupportedCombination : public Error {
 public:
  explicit UnsupportedCombination(const std::string& what) : Error(what) {}
};

/// Operation requires a quantum-type theory and got something else.
class UnsupportedTheory : public Error {
 public:
  explicit UnsupportedTheory(const std::string& what) : Error(what) {}
};

/// Protocol fails a structural requirement (unphysical state, invalid
/// measurement, honest acceptance not above one half).
class InvalidProtocol : public Error {
 public:
  explicit InvalidProtocol(const std::string& what) : Error(what) {}
};

/// The impossibility theorem's hypotheses do not hold for this protocol
/// (No-Restriction fails on Bob's factor); the analysis refuses to proceed.
class TheoremInapplicable : public Error {
 public:
  explicit TheoremInapplicable(const std::string& what) : Error(what) {}
};

/// Protocol or program file could not be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace gptcone
