#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Variables are identified by name. Every MPoly keeps its variable list
// sorted and restricted to the variables that actually occur, and its terms
// in graded-lexicographic order, so two polynomials are mathematically equal
// exactly when they are structurally equal.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sextic/exact_core.hpp"

namespace sextic {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then exponent vectors
/// compared left to right.
struct GrLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponents, BigRat, GrLex>;

  MPoly() = default;
  MPoly(long c);            // NOLINT(google-explicit-constructor)
  MPoly(const BigRat& c);   // NOLINT(google-explicit-constructor)

  static MPoly var(const std::string& name);
  /// Terms may repeat exponent vectors (they are summed) and may carry zero
  /// coefficients (they are dropped).
  static MPoly from_terms(std::vector<std::string> vars,
                          const std::vector<std::pair<Exponents, BigRat>>& terms);

  /// Sum of many polynomials in one pass.
  static MPoly sum(const std::vector<MPoly>& parts);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Value of a constant polynomial; throws std::logic_error otherwise.
  BigRat constant_value() const;

  bool depends_on(const std::string& v) const;
  unsigned degree_in(const std::string& v) const;
  unsigned total_degree() const;

  /// Coefficient of v^d, as a polynomial in the remaining variables.
  MPoly coefficient(const std::string& v, unsigned d) const;
  /// Coefficient of one monomial given as {name: exponent}; names not
  /// listed have exponent zero.
  BigRat coefficient_of(const std::map<std::string, unsigned>& monomial) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Human readable form, highest terms first, e.g. "x^2 + 2*x*y - 1/3".
  std::string str() const;

 private:
  MPoly(std::vector<std::string> vars, TermMap terms);
  void normalize();
  MPoly aligned_to(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned e);

using Assignment = std::map<std::string, BigRat>;

/// Exact value at a point; throws std::invalid_argument naming the first
/// variable of p that the assignment leaves unbound.
BigRat poly_eval(const MPoly& p, const Assignment& point);

/// Replaces each bound variable by a polynomial; unbound variables stay.
MPoly poly_substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings);

bool poly_equal(const MPoly& p, const MPoly& q);

/// Exchanges the names a and b.
MPoly swap_variables(const MPoly& p, const std::string& a, const std::string& b);

/// Rewrites a polynomial symmetric in x and y in terms of e1 = x + y and
/// e2 = x*y (other variables untouched). Throws std::invalid_argument when p
/// is not symmetric or e1/e2 already occur in p.
MPoly symmetric_reduce(const MPoly& p, const std::string& x, const std::string& y,
                       const std::string& e1 = "e1", const std::string& e2 = "e2");

/// Reduces p modulo Y^2 - g, leaving Y-degree at most 1. g must not involve Y.
MPoly reduce_mod_square(const MPoly& p, const std::string& y, const MPoly& g);

/// Quotient of two polynomials, kept unreduced.
struct RationalFunction {
  MPoly num;
  MPoly den = 1;

  RationalFunction() = default;
  RationalFunction(MPoly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(MPoly n, MPoly d);

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
};

/// Substitutes rational functions for variables; the result's denominator is
/// the product of the binding denominators raised to p's degree in each.
RationalFunction substitute_fractions(const MPoly& p,
                                      const std::map<std::string, RationalFunction>& bindings);

}  // namespace sextic
