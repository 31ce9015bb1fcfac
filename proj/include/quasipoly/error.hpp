#pragma once

#include <stdexcept>
#include <string>

namespace quasipoly {

// Base for every recoverable error raised by the library. Internal invariant
// violations are reported with std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two operands live in different cyclotomic rings.
class ModulusMismatch : public InvalidArgument {
 public:
  ModulusMismatch(int a, int b)
      : InvalidArgument("modulus mismatch: " + std::to_string(a) + " vs " +
                        std::to_string(b)) {}
};

// The requested edge number admits no U-polygon of class >= 4.
class Inadmissible : public Error {
 public:
  using Error::Error;
};

// An enumeration or search ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A search finished within budget without finding a witness.
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace quasipoly
