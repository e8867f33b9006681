#pragma once

// Canonical heights on Mordell curves: archimedean series plus local
// corrections at the bad primes of a minimal model.

#include <string>
#include <utility>
#include <vector>

#include "sextic/exact_core.hpp"
#include "sextic/factor.hpp"
#include "sextic/mordell.hpp"

namespace sextic {

/// kLimitX: h(P) = lim h(x(nP)) / n^2, with h the log height of x.
/// kHalf: half of that (the sigma-function convention).
enum class HeightNormalization { kLimitX, kHalf };

std::string to_string(HeightNormalization n);
HeightNormalization parse_normalization(const std::string& s);

/// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t
struct ModelChange {
  BigRat u, r, s, t;

  WeierstrassCurve apply(const WeierstrassCurve& e) const;
  CurvePoint apply(const CurvePoint& p) const;
};

struct MinimalModel {
  WeierstrassCurve curve;  // integral and minimal at every prime
  BigRat lambda;           // y^2 = x^3 + k  ->  y^2 = x^3 + lambda^6 k
  std::vector<ModelChange> changes;
  std::vector<PrimePower> bad_primes;  // primes dividing the minimal discriminant, with v_p

  CurvePoint map(const CurvePoint& p) const;
};

/// Clears denominators, strips sixth powers at p >= 5 and tries the u = 2, 3
/// changes of variable that keep the model integral. Needs the prime support
/// of 6k; throws FactorizationIncomplete when the budget leaves a cofactor.
MinimalModel minimal_model(const MordellCurve& e, const FactorBudget& budget = {});

struct HeightValue {
  BigReal value;
  BigReal error;  // |value - true height| <= error
};

struct HeightTerms {
  BigReal archimedean;
  BigReal denominator;                       // log den(x) on the minimal model
  std::vector<std::pair<BigInt, BigRat>> local;  // bad p with P singular mod p: (p, L_p), term L_p log p
};

/// Archimedean part in the kLimitX convention for any real Weierstrass
/// model, by the doubling series with t = 1/x or 1/(x+1).
BigReal archimedean_height(const WeierstrassCurve& e, const BigRat& x, long precision, int iterations);

/// Heights on one curve; the minimal model is computed once.
class HeightCalculator {
 public:
  HeightCalculator(const MordellCurve& e, long precision,
                   HeightNormalization normalization = HeightNormalization::kLimitX,
                   const FactorBudget& budget = {});

  const MordellCurve& curve() const { return curve_; }
  const MinimalModel& model() const { return model_; }
  long precision() const { return precision_; }
  HeightNormalization normalization() const { return normalization_; }

  HeightValue height(const CurvePoint& p) const;
  HeightTerms terms(const CurvePoint& p) const;
  /// (h(P+Q) - h(P) - h(Q)) / 2
  HeightValue pairing(const CurvePoint& p, const CurvePoint& q) const;

 private:
  MordellCurve curve_;
  long precision_;
  HeightNormalization normalization_;
  MinimalModel model_;
  int iterations_;
  BigReal tail_;
};

/// Error bound at most 2^(-precision/2). Throws NotOnCurve off the curve.
HeightValue canonical_height(const MordellCurve& e, const CurvePoint& p, long precision,
                             HeightNormalization normalization = HeightNormalization::kLimitX);
HeightValue height_pairing(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q, long precision,
                           HeightNormalization normalization = HeightNormalization::kLimitX);

/// p-adic valuation; a very large value for 0.
long valuation(const BigRat& q, const BigInt& p);

}  // namespace sextic
