#include <random>

#include "doctest.h"
#include "sextic/exact_core.hpp"
#include "sextic/factor.hpp"

using namespace sextic;

namespace {

BigInt random_big(std::mt19937_64& rng, int limbs) {
  BigInt r = 0;
  for (int i = 0; i < limbs; ++i) {
    r <<= 64;
    r += BigInt(std::to_string(rng()));
  }
  return r;
}

BigRat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  return BigRat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rat_make reduces and normalizes sign") {
  CHECK(rat_make(2, 4).str() == "1/2");
  CHECK(rat_make(3, -6).str() == "-1/2");
  const BigRat z = rat_make(0, 5);
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);
  CHECK(z.str() == "0");
  CHECK_THROWS_WITH_AS(rat_make(1, 0), "division by zero", std::domain_error);
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), std::domain_error);
}

TEST_CASE("rational parsing and printing round trip") {
  CHECK(BigRat::parse("-14911/4695") == BigRat(-14911, 4695));
  CHECK(BigRat::parse("10/-4").str() == "-5/2");
  CHECK(BigRat::parse(" 7 ") == BigRat(7));
  CHECK_THROWS_AS(BigRat::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(BigRat::parse(""), std::invalid_argument);
  CHECK(BigRat::parse("44906825622115054978352852841").num() == BigInt("44906825622115054978352852841"));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 200; ++i) {
    const BigRat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == BigRat(0));
    if (!a.is_zero()) CHECK(a * inverse(a) == BigRat(1));
    CHECK(a.den() > 0);
    CHECK(gcd(a.num(), a.den()) == 1);
  }
}

TEST_CASE("ordering and powers") {
  CHECK(BigRat(-1, 2) < BigRat(1, 3));
  CHECK(BigRat(2, 4) == BigRat(1, 2));
  CHECK(pow(BigRat(2, 3), 3) == BigRat(8, 27));
  CHECK(pow(BigRat(2, 3), -2) == BigRat(9, 4));
  CHECK(pow(BigRat(5), 0) == BigRat(1));
}

TEST_CASE("integer square roots") {
  CHECK(*int_sqrt_exact(144) == 12);
  CHECK_FALSE(int_sqrt_exact(48).has_value());
  CHECK(*int_sqrt_exact(0) == 0);
  CHECK_THROWS_AS(int_sqrt_exact(-4), std::domain_error);

  const BigInt y("211912492824721");
  CHECK(*int_sqrt_exact(y * y) == y);

  std::mt19937_64 rng(7);
  const BigInt bound("1000000000000000000000000000000");
  for (int i = 0; i < 200; ++i) {
    BigInt s = random_big(rng, 2);
    s %= bound;
    CHECK(*int_sqrt_exact(s * s) == s);
    if (s > 0) CHECK_FALSE(int_sqrt_exact(s * s + 1).has_value());
  }
}

TEST_CASE("rational square roots") {
  CHECK(*rat_sqrt_exact(BigRat(10201, 14641)) == BigRat(101, 121));
  CHECK_FALSE(rat_sqrt_exact(BigRat(2, 9)).has_value());
  CHECK_FALSE(rat_sqrt_exact(BigRat(-4)).has_value());
  CHECK(is_rational_square(BigRat(0)));
}

TEST_CASE("factor small cases") {
  const Factorization f12 = factor(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});
  CHECK(f12.complete);

  const Factorization f1 = factor(1);
  CHECK(f1.factors.empty());
  CHECK(f1.cofactor == 1);
  CHECK(f1.complete);

  const Factorization fneg = factor(-98);
  CHECK(fneg.sign == -1);
  CHECK(fneg.product() == -98);
  CHECK(fneg.exponent_of(7) == 2);

  CHECK_THROWS_AS(factor(0), std::domain_error);
}

TEST_CASE("factor reassembles random integers up to 1e12") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned long> d(1, 1000000000000ul);
  for (int i = 0; i < 1000; ++i) {
    const BigInt n(std::to_string(d(rng)));
    const Factorization f = factor(n);
    CHECK(f.complete);
    CHECK(f.product() == n);
    for (const auto& pp : f.factors) CHECK(is_probable_prime(pp.prime));
  }
}

TEST_CASE("factor the 29-digit curve constant") {
  const BigInt k("44906825622115054978352852841");
  const Factorization f = factor(k);
  CHECK(f.complete);
  CHECK(f.product() == k);
  for (const auto& pp : f.factors) CHECK(is_probable_prime(pp.prime));
  // 3^3 13^2 19^2 47 647 5134147 174616085569
  CHECK(f.exponent_of(3) == 3);
  CHECK(f.exponent_of(13) == 2);
  CHECK(f.exponent_of(BigInt("174616085569")) == 1);
}

TEST_CASE("factor perfect powers and semiprimes") {
  const BigInt p("1000000007"), q("998244353");
  const BigInt n = p * p * p * q;
  const Factorization f = factor(n);
  CHECK(f.complete);
  CHECK(f.exponent_of(p) == 3);
  CHECK(f.exponent_of(q) == 1);

  // 13- and 20-digit primes: past trial division
  const BigInt a("1000000000039"), b("10000000000000000087");
  REQUIRE(is_probable_prime(a));
  REQUIRE(is_probable_prime(b));
  const Factorization g = factor(a * b);
  CHECK(g.complete);
  CHECK(g.product() == a * b);
}

TEST_CASE("ecm finds a medium factor") {
  const BigInt p("1000000000039"), q("100000000000000000039");
  REQUIRE(is_probable_prime(p));
  REQUIRE(is_probable_prime(q));
  const BigInt d = detail::ecm_find_factor(p * q, 60, 5000, 3);
  CHECK((d == p || d == q));
}

TEST_CASE("budget exhaustion leaves a cofactor") {
  FactorBudget tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 10;
  tiny.ecm_curves = 0;
  const BigInt a("1000000000000000000117"), b("1000000000000000000193");
  REQUIRE(is_probable_prime(a));
  REQUIRE(is_probable_prime(b));
  const Factorization f = factor(a * b * 12, tiny);
  CHECK_FALSE(f.complete);
  CHECK(f.cofactor == a * b);
  CHECK(f.product() == a * b * 12);
}

TEST_CASE("BigReal basics") {
  const BigReal two = BigReal::from_long(2, 256);
  const BigReal r = sqrt(two);
  CHECK(abs(r * r - two) < pow2(-250, 256));
  CHECK(log(exp(two)).fixed(20) == two.fixed(20));
  CHECK(BigReal(BigRat(1, 3), 128).precision() == 128);
  CHECK((BigReal(BigRat(1, 3), 64) + BigReal(BigRat(1, 3), 256)).precision() == 256);
  CHECK(log_abs(BigInt(-42907150), 256).fixed(12) == log(BigReal::from_long(42907150, 256)).fixed(12));
  CHECK_THROWS_AS(log(BigReal::from_long(0, 64)), std::domain_error);
  CHECK(BigReal::parse("10390179.16", 256).fixed(2) == "10390179.16");
}
