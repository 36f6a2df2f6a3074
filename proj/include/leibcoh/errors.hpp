#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace leibcoh {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input (malformed input files, out-of-range parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

// A linear map does not preserve a subspace it was asked to act on.
class StabilityError : public Error {
 public:
  using Error::Error;
};

// Structure constants or action matrices violate the Leibniz/module axioms.
class ModuleAxiomError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// The h-action of an sl2-module is not diagonalizable with integer weights.
class NonIntegralWeightError : public Error {
 public:
  using Error::Error;
};

// A cochain complex with d∘d ≠ 0.
class ComplexError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

// A closed-form value disagrees with its brute-force oracle.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// The E2 zero pattern does not force collapse. witness = (r, p, q) of a
// differential d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} with nonzero source and target.
class CollapseNotCertified : public Error {
 public:
  CollapseNotCertified(const std::string& what, std::array<int, 3> witness)
      : Error(what), witness_(witness) {}
  std::array<int, 3> witness() const { return witness_; }

 private:
  std::array<int, 3> witness_;
};

}  // namespace leibcoh
