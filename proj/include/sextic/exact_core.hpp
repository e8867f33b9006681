#pragma once

// Exact integers and rationals (GMP) and working-precision reals (MPFR).

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace sextic {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a strictly positive
/// denominator. Zero is 0/1.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error("division by zero") when den == 0.
  BigRat(const BigInt& num, const BigInt& den);

  /// Accepts "a", "-a", "a/b" (b may be negative; result is normalized).
  static BigRat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "num/den", or "num" when the denominator is 1.
  std::string str() const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

 private:
  explicit BigRat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

BigRat rat_make(const BigInt& num, const BigInt& den);
BigRat abs(const BigRat& q);
BigRat inverse(const BigRat& q);
BigRat pow(const BigRat& q, long e);

/// Exact square root of a nonnegative integer, or nullopt. Throws
/// std::domain_error on negative input.
std::optional<BigInt> int_sqrt_exact(const BigInt& n);
/// Exact square root of a nonnegative rational (num and den both squares).
std::optional<BigRat> rat_sqrt_exact(const BigRat& q);

/// True when q is the square of a rational (zero included).
bool is_rational_square(const BigRat& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Decimal string of an integer.
inline std::string to_string(const BigInt& n) { return n.get_str(); }
BigInt parse_int(std::string_view text);

// ---------------------------------------------------------------------------

/// Real number with an explicit MPFR precision. Binary operations produce a
/// result at the larger of the operand precisions.
class BigReal {
 public:
  static constexpr long kDefaultPrecision = 256;

  explicit BigReal(long precision = kDefaultPrecision);
  BigReal(const BigRat& q, long precision);
  BigReal(const BigInt& n, long precision);
  static BigReal from_double(double d, long precision);
  static BigReal from_long(long v, long precision);
  static BigReal parse(std::string_view text, long precision);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Fixed-point decimal with the given number of fractional digits.
  std::string fixed(int digits) const;
  /// Scientific notation with the given number of significant digits.
  std::string sci(int digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const BigReal& r) { return os << r.sci(30); }

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
/// 2^e at the given precision.
BigReal pow2(long e, long precision);
/// Natural log of |n| for a nonzero integer, computed without overflow.
BigReal log_abs(const BigInt& n, long precision);
BigReal max(const BigReal& a, const BigReal& b);

}  // namespace sextic
