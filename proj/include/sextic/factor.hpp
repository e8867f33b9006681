#pragma once

#include <cstdint>
#include <vector>

#include "sextic/exact_core.hpp"

namespace sextic {

/// Effort limits for factor(). Anything the budget cannot split is returned
/// as the cofactor of an incomplete Factorization.
struct FactorBudget {
  unsigned long trial_bound = 1ul << 16;
  unsigned long rho_iterations = 1ul << 21;  // per composite
  unsigned ecm_curves = 20;
  unsigned long ecm_b1 = 3000;  // stage 2 runs to 100 * b1
  std::uint64_t seed = 0x5e37'1c0dULL;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod(prime^exponent) * cofactor. The cofactor is 1 exactly when
/// the factorization is complete.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending primes
  BigInt cofactor = 1;
  bool complete = true;

  BigInt product() const;
  /// Exponent of p in the listed factors (0 when absent).
  unsigned exponent_of(const BigInt& p) const;
};

bool is_probable_prime(const BigInt& n);

/// Trial division, Brent's rho, then elliptic-curve stage 1/2 on whatever
/// remains. Throws std::domain_error for n == 0.
Factorization factor(const BigInt& n, const FactorBudget& budget = {});

namespace detail {
/// Single attempts, exposed for testing. Return 0 when no proper factor
/// was found within the effort given.
BigInt pollard_brent(const BigInt& n, unsigned long iterations, std::uint64_t seed);
BigInt ecm_find_factor(const BigInt& n, unsigned curves, unsigned long b1, std::uint64_t seed);
}  // namespace detail

}  // namespace sextic
