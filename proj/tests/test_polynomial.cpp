#include <random>

#include "doctest.h"
#include "sextic/chain_forms.hpp"
#include "sextic/chains.hpp"
#include "sextic/polynomial.hpp"

using namespace sextic;

namespace {

const MPoly x = MPoly::var("x");
const MPoly y = MPoly::var("y");
const MPoly z = MPoly::var("z");

BigRat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  return BigRat(num(rng), den(rng));
}

MPoly random_poly(std::mt19937_64& rng, const std::vector<MPoly>& vars, int terms) {
  std::uniform_int_distribution<int> e(0, 3), pick(0, static_cast<int>(vars.size()) - 1);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    MPoly t = small_rat(rng);
    for (int k = 0; k < 2; ++k) t *= pow(vars[static_cast<std::size_t>(pick(rng))], static_cast<unsigned>(e(rng)));
    p += t;
  }
  return p;
}

}  // namespace

TEST_CASE("construction keeps only live variables and nonzero terms") {
  const MPoly p = x + y - y;
  CHECK(p.variables() == std::vector<std::string>{"x"});
  CHECK((x - x).is_zero());
  CHECK((x - x).variables().empty());
  const MPoly q = MPoly::from_terms({"y", "x"}, {{{1, 0}, 3}, {{0, 2}, 0}, {{1, 0}, -1}});
  CHECK(q == MPoly(2) * y);
  CHECK_THROWS_AS(MPoly::from_terms({"x", "x"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(MPoly::from_terms({"x"}, {{{1, 1}, 1}}), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CHECK(poly_eval(x * x + y, {{"x", 2}, {"y", 3}}) == BigRat(7));
  CHECK(poly_eval(phi_polynomial(), {{"x", 1}, {"y", 1}, {"z", 1}}) == BigRat(-3));
  CHECK(poly_eval(phi_polynomial(), {{"x", 100958}, {"y", 425}, {"z", 113259}}) ==
        BigRat(4) * BigRat::parse("44906825622115054978352852841"));
  CHECK_THROWS_WITH_AS(poly_eval(x * y, {{"x", 1}}), "no value for variable y", std::invalid_argument);
  CHECK(poly_eval(MPoly(5), {}) == BigRat(5));
}

TEST_CASE("substitution") {
  const MPoly u = MPoly::var("u"), v = MPoly::var("v");
  CHECK(poly_substitute(x * x, {{"x", u + v}}) == u * u + MPoly(2) * u * v + v * v);
  CHECK(poly_substitute(x * y, {{"x", y}}) == y * y);
  CHECK(poly_substitute(x + z, {{"y", u}}) == x + z);
}

TEST_CASE("t substitution in the family-1 (p,q) choice and chain forms") {
  const MPoly m = MPoly::var("m"), n = MPoly::var("n"), t = MPoly::var("t");
  const MPoly tv = m * m - m * n + n * n;
  const auto pq_t = forms::family1_pq_choice(m, n, t);
  const auto pq_direct = forms::family1_pq_choice(m, n, tv);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(pq_t[i].depends_on("t"));
    const MPoly sub = poly_substitute(pq_t[i], {{"t", tv}});
    CHECK_FALSE(sub.depends_on("t"));
    CHECK(sub == pq_direct[i]);
  }
  const auto c_t = forms::family1_chain_forms(m, n, t);
  const auto c_direct = forms::family1_chain_forms(m, n, tv);
  CHECK(poly_substitute(c_t[0], {{"t", tv}}) == c_direct[0]);
  CHECK(poly_substitute(c_t[8], {{"t", tv}}) == c_direct[8]);
}

TEST_CASE("substitute then evaluate equals evaluate then substitute") {
  std::mt19937_64 rng(31337);
  const MPoly u = MPoly::var("u"), v = MPoly::var("v");
  const MPoly p = random_poly(rng, {x, y, z}, 8);
  const MPoly bx = random_poly(rng, {u, v}, 3), by = random_poly(rng, {u, v}, 3);
  const MPoly composed = poly_substitute(p, {{"x", bx}, {"y", by}});
  for (int i = 0; i < 20; ++i) {
    const Assignment pt{{"u", small_rat(rng)}, {"v", small_rat(rng)}, {"z", small_rat(rng)}};
    const Assignment inner{{"x", poly_eval(bx, pt)}, {"y", poly_eval(by, pt)}, {"z", pt.at("z")}};
    CHECK(poly_eval(composed, pt) == poly_eval(p, inner));
  }
}

TEST_CASE("equality and the two core identities") {
  CHECK(poly_equal(pow(x + y, 2), x * x + MPoly(2) * x * y + y * y));
  CHECK_FALSE(poly_equal(pow(x + y, 2), x * x + y * y));
  const MPoly s = pow(x, 3) + pow(y, 3) - pow(z, 3);
  CHECK(poly_equal(phi_polynomial(), s * s - MPoly(4) * pow(x * y, 3)));
  CHECK(poly_equal(phi_polynomial(), MPoly(4) * pow(quadratic_form(), 3) - MPoly(3) * pow(cubic_form(), 2)));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 25; ++i) {
    const MPoly a = random_poly(rng, {x, y, z}, 5), b = random_poly(rng, {x, y}, 5), c = random_poly(rng, {y, z}, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("symmetric_reduce examples") {
  const MPoly e1 = MPoly::var("e1"), e2 = MPoly::var("e2");
  CHECK(symmetric_reduce(x + y, "x", "y") == e1);
  CHECK(symmetric_reduce(x * x + y * y, "x", "y") == e1 * e1 - MPoly(2) * e2);
  CHECK(symmetric_reduce(pow(x, 3) + pow(y, 3) - pow(z, 3), "x", "y") ==
        pow(e1, 3) - MPoly(3) * e1 * e2 - pow(z, 3));
  CHECK_THROWS_AS(symmetric_reduce(x - y, "x", "y"), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_reduce(x + y + e1, "x", "y"), std::invalid_argument);
}

TEST_CASE("symmetric_reduce round trip") {
  std::mt19937_64 rng(555);
  const std::map<std::string, MPoly> back{{"e1", x + y}, {"e2", x * y}};
  for (int i = 0; i < 20; ++i) {
    const MPoly a = random_poly(rng, {x, y, z}, 6);
    const MPoly sym = a + swap_variables(a, "x", "y");
    const MPoly r = symmetric_reduce(sym, "x", "y");
    CHECK_FALSE(r.depends_on("x"));
    CHECK_FALSE(r.depends_on("y"));
    CHECK(poly_substitute(r, back) == sym);
  }
  CHECK(poly_substitute(symmetric_reduce(quadratic_form(), "x", "y"), back) == quadratic_form());
  CHECK(poly_substitute(symmetric_reduce(cubic_form(), "x", "y"), back) == cubic_form());
}

TEST_CASE("reduce_mod_square") {
  const MPoly Y = MPoly::var("Y"), m = MPoly::var("m");
  const MPoly g = pow(m, 4) + MPoly(3) * m + MPoly(1);
  CHECK(reduce_mod_square(Y * Y, "Y", g) == g);
  CHECK(reduce_mod_square(pow(Y, 3) + m, "Y", g) == g * Y + m);
  CHECK_THROWS_AS(reduce_mod_square(Y, "Y", Y + m), std::invalid_argument);

  // with g a perfect square s^2, Y -> s and Y -> -s turn p and its reduction into the same polynomial
  const MPoly sq = m * m + MPoly(2) * m - MPoly(3);
  const MPoly g2 = sq * sq;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const MPoly p = random_poly(rng, {Y, m}, 6) * pow(Y, 2) + random_poly(rng, {Y, m}, 4);
    const MPoly r = reduce_mod_square(p, "Y", g2);
    CHECK(r.degree_in("Y") <= 1);
    CHECK(poly_substitute(p, {{"Y", sq}}) == poly_substitute(r, {{"Y", sq}}));
    CHECK(poly_substitute(p, {{"Y", -sq}}) == poly_substitute(r, {{"Y", -sq}}));
  }
}

TEST_CASE("rational function substitution") {
  const MPoly u = MPoly::var("u");
  const RationalFunction r = substitute_fractions(x * x + x, {{"x", RationalFunction(u, u + MPoly(1))}});
  // (u/(u+1))^2 + u/(u+1) = (u^2 + u(u+1)) / (u+1)^2
  CHECK(r.den == pow(u + MPoly(1), 2));
  CHECK(r.num == u * u + u * (u + MPoly(1)));
  CHECK_THROWS_AS(RationalFunction(u, MPoly()), std::domain_error);
}

TEST_CASE("pretty printing") {
  CHECK((x * x + MPoly(2) * x * y - MPoly(BigRat(1, 3))).str() == "x^2 + 2*x*y - 1/3");
  CHECK(MPoly().str() == "0");
  CHECK((-x).str() == "-x");
}
