#pragma once

// Rational m with f(m) a square, for quartic (or cubic) f.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sextic/chains.hpp"
#include "sextic/exact_core.hpp"
#include "sextic/polynomial.hpp"

namespace sextic {

/// f(m) = a4 m^4 + a3 m^3 + a2 m^2 + a1 m + a0 with a4 or a3 nonzero.
class QuarticCurve {
 public:
  /// Coefficients highest degree first. Throws std::invalid_argument when
  /// a4 = a3 = 0.
  QuarticCurve(const BigRat& a4, const BigRat& a3, const BigRat& a2, const BigRat& a1, const BigRat& a0);
  /// "a4,a3,a2,a1,a0" with rational entries.
  static QuarticCurve parse(const std::string& text);
  /// From a univariate polynomial of degree 3 or 4 in `var`.
  static QuarticCurve from_poly(const MPoly& p, const std::string& var = "m");

  /// Coefficient of m^i.
  const BigRat& coeff(unsigned i) const { return c_[i]; }
  BigRat eval(const BigRat& m) const;
  MPoly to_poly(const std::string& var = "m") const;
  /// True when f is the square of a polynomial (then every m qualifies).
  bool is_polynomial_square() const;
  std::string str() const;

  friend bool operator==(const QuarticCurve&, const QuarticCurve&) = default;

 private:
  std::array<BigRat, 5> c_;  // ascending
};

struct SquareValuePoint {
  BigRat m;
  BigRat y;  // y >= 0, y^2 = f(m)

  friend bool operator==(const SquareValuePoint&, const SquareValuePoint&) = default;
};

struct SieveOptions {
  unsigned shards = 1;
  /// Called from worker threads with a short status line; never mixed into
  /// the returned results.
  std::function<void(const std::string&)> progress;
};

/// All m = a/b in lowest terms, b >= 1, max(|a|, b) <= height_bound, with
/// b^4 f(a/b) a square. Residue sieve over the primes below 100, exact
/// confirmation of survivors. Sorted by height, then numerator. Throws
/// std::invalid_argument when height_bound < 1 or f is a polynomial square.
std::vector<SquareValuePoint> search_square_values(const QuarticCurve& f, long height_bound,
                                                   const SieveOptions& options = {});

/// Reference implementation without the sieve: exact test of every pair.
std::vector<SquareValuePoint> search_square_values_brute(const QuarticCurve& f, long height_bound);

/// Tangent step at m = 0 for f(0) = e^2 != 0: the quadratic g matching f to
/// second order meets it again at m = -A/B where f - g^2 = m^3 (A + B m).
/// DegenerateInput for a non-square constant term or a degenerate tangent.
SquareValuePoint fermat_step(const QuarticCurve& f);

/// g(s) = f(m0 + s): the same curve with the known point moved to s = 0.
/// Equivalent to substituting m = m0 + 1/u, clearing u^4 and reversing
/// coefficients. Points map back by m = m0 + s.
struct Recentered {
  QuarticCurve g;
  BigRat m0;

  BigRat to_original(const BigRat& s) const { return m0 + s; }
};

/// Requires f(pt.m) = pt.y^2 with y != 0 (std::invalid_argument otherwise).
Recentered recenter_quartic(const QuarticCurve& f, const SquareValuePoint& pt);

/// Fermat step at a known point, mapped back to f's coordinates.
SquareValuePoint fermat_step_at(const QuarticCurve& f, const SquareValuePoint& pt);

/// True when p and q differ by a nonzero rational square factor.
bool square_class_equivalent(const MPoly& p, const MPoly& q);

/// The q = 0, (p, r) = (3, 4) quartic as published and its Weierstrass model
/// v^2 = u^3 + u^2 + 51492677220 u - 3062315437673472.
QuarticCurve published_condition_quartic();
MPoly weierstrass_model_poly(const std::string& u = "u", const std::string& v = "v");

struct UV {
  BigRat u, v;
};
/// The three listed generators of the Weierstrass model.
std::vector<UV> published_generators();

/// (u, v) -> (m, Y) along the published map. Throws DegenerateInput at a pole.
SquareValuePoint weierstrass_to_quartic(const UV& p, BigRat* y_signed = nullptr);

/// Exact checks: the forward map lands on the Weierstrass model modulo
/// Y^2 = f; both compositions are the identity modulo the curve relations;
/// the generators lie on the model; their images give square values of f.
std::vector<IdentityCheck> verify_birational_maps();

}  // namespace sextic
