#include "sextic/exact_core.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sextic {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  return BigRat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string BigRat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-v_)); }

BigRat& BigRat::operator+=(const BigRat& o) {
  v_ += o.v_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
  v_ -= o.v_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
  v_ *= o.v_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat rat_make(const BigInt& num, const BigInt& den) { return BigRat(num, den); }

BigRat abs(const BigRat& q) { return q.sign() < 0 ? -q : q; }

BigRat inverse(const BigRat& q) { return BigRat(1) / q; }

BigRat pow(const BigRat& q, long e) {
  if (e < 0) return pow(inverse(q), -e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
  if (n < 0) throw std::domain_error("square root of a negative integer");
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

std::optional<BigRat> rat_sqrt_exact(const BigRat& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = int_sqrt_exact(q.num());
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(q.den());
  if (!d) return std::nullopt;
  return BigRat(*n, *d);
}

bool is_rational_square(const BigRat& q) { return rat_sqrt_exact(q).has_value(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt parse_int(std::string_view text) {
  std::string s(text);
  // gmp accepts a leading '+' poorly and leading spaces not at all
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty integer literal");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  BigInt n;
  if (s.empty() || n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
  return n;
}

// ---------------------------------------------------------------------------

BigReal::BigReal(long precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigRat& q, long precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigInt& n, long precision) {
  mpfr_init2(v_, precision);
  mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::from_double(double d, long precision) {
  BigReal r(precision);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_long(long v, long precision) {
  BigReal r(precision);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, long precision) {
  BigReal r(precision);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad real literal: " + s);
  return r;
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigReal::fixed(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BigReal::sci(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

template <class Op>
void apply_binary(mpfr_t self, mpfr_srcptr other, Op op) {
  if (mpfr_get_prec(other) > mpfr_get_prec(self)) mpfr_prec_round(self, mpfr_get_prec(other), MPFR_RNDN);
  op(self, self, other, MPFR_RNDN);
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& o) {
  apply_binary(v_, o.v_, mpfr_add);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  apply_binary(v_, o.v_, mpfr_sub);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  apply_binary(v_, o.v_, mpfr_mul);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  apply_binary(v_, o.v_, mpfr_div);
  return *this;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("log of a non-positive real");
  BigReal r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of a negative real");
  BigReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow2(long e, long precision) {
  BigReal r(precision);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

BigReal log_abs(const BigInt& n, long precision) {
  if (n == 0) throw std::domain_error("log of zero");
  BigInt a = ::abs(n);
  return log(BigReal(a, precision));
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

}  // namespace sextic
