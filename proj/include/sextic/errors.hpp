#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sextic {

/// Parameters for which a construction collapses (vanishing denominator,
/// zero leading coefficient, non-square discriminant, ...).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that should be exact by construction failed its own
/// consistency check.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotOnCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two triples of a proposed chain have different values of the sextic form.
class ChainMismatch : public std::runtime_error {
 public:
  ChainMismatch(std::size_t index, std::string expected, std::string actual)
      : std::runtime_error("chain mismatch at triple " + std::to_string(index) +
                           ": phi = " + actual + ", expected " + expected),
        index_(index),
        expected_(std::move(expected)),
        actual_(std::move(actual)) {}

  std::size_t index() const noexcept { return index_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  std::size_t index_;
  std::string expected_;
  std::string actual_;
};

/// Raised when a height computation needs the prime support of the
/// discriminant but the factoring budget ran out.
class FactorizationIncomplete : public std::runtime_error {
 public:
  explicit FactorizationIncomplete(const mpz_class& cofactor)
      : std::runtime_error("height requires factored discriminant; unfactored cofactor " +
                           cofactor.get_str()),
        cofactor_(cofactor) {}

  const mpz_class& cofactor() const noexcept { return cofactor_; }

 private:
  mpz_class cofactor_;
};

}  // namespace sextic
