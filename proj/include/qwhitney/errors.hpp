#pragma once

#include <stdexcept>
#include <string>

namespace qwhitney {

// Exact division requested where the divisor does not divide the dividend.
class NonDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at q = 0 of a Laurent polynomial with negative exponents.
class EvalAtZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series inversion with a constant term that is not +-q^e.
class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Triangular inversion over a matrix whose diagonal holds a non-unit.
class NonUnitDiagonal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownCheckId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qwhitney
