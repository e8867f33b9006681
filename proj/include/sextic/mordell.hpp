#pragma once

// Elliptic curves in long Weierstrass form, Mordell curves y^2 = x^3 + k,
// the exact group law, and the map from sextic chains to rational points.

#include <cstddef>
#include <vector>

#include "sextic/chains.hpp"
#include "sextic/exact_core.hpp"

namespace sextic {

struct CurvePoint {
  bool infinity = false;
  BigRat x, y;

  static CurvePoint at_infinity() { return {true, 0, 0}; }
  static CurvePoint affine(BigRat x, BigRat y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
  BigRat a1, a2, a3, a4, a6;

  BigRat b2() const { return a1 * a1 + BigRat(4) * a2; }
  BigRat b4() const { return BigRat(2) * a4 + a1 * a3; }
  BigRat b6() const { return a3 * a3 + BigRat(4) * a6; }
  BigRat b8() const {
    return a1 * a1 * a6 + BigRat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  BigRat c4() const;
  BigRat c6() const;
  BigRat discriminant() const;
  bool is_integral() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p);
/// Chord and tangent. Throws NotOnCurve for an off-curve input.
CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint subtract(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
/// Double and add; negative n allowed.
CurvePoint scalar_mul(const WeierstrassCurve& e, long n, const CurvePoint& p);

/// y^2 = x^3 + k with k != 0.
class MordellCurve {
 public:
  /// Throws DegenerateInput for k = 0.
  explicit MordellCurve(BigRat k);

  const BigRat& k() const { return k_; }
  WeierstrassCurve weierstrass() const { return {0, 0, 0, 0, k_}; }
  /// -432 k^2
  BigRat discriminant() const { return BigRat(-432) * k_ * k_; }

  friend bool operator==(const MordellCurve&, const MordellCurve&) = default;

 private:
  BigRat k_;
};

bool on_curve(const MordellCurve& e, const CurvePoint& p);
CurvePoint negate(const MordellCurve& e, const CurvePoint& p);
CurvePoint add(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint subtract(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const MordellCurve& e, long n, const CurvePoint& p);

/// k = phi / 4 of the chain. Throws DegenerateInput when phi = 0.
MordellCurve curve_from_chain(const ChainSolution& chain);

/// (x, y, k) -> (l^2 x, l^3 y, l^6 k) with l^6 k an integer.
struct IntegralRescale {
  MordellCurve curve;
  BigRat lambda;

  CurvePoint map(const CurvePoint& p) const;
};
/// Smallest positive integer l clearing the denominator of k.
IntegralRescale integral_rescale(const MordellCurve& e);

struct ChainPoints {
  std::vector<CurvePoint> points;  // distinct, in emission order
  std::size_t emitted = 0;
};

/// Per triple, in order: (xy, (x^3+y^3-z^3)/2), (yz, (y^3+z^3-x^3)/2),
/// (xz, (x^3+z^3-y^3)/2). Exact duplicates are dropped; P and -P are both
/// kept. Throws InternalError if a point misses the curve and
/// std::invalid_argument when the curve does not belong to the chain.
ChainPoints points_from_chain(const ChainSolution& chain, const MordellCurve& curve);

/// log max(|num x|, den x). Throws std::invalid_argument at infinity.
BigReal naive_height(const CurvePoint& p, long precision = BigReal::kDefaultPrecision);

}  // namespace sextic
