#include <random>

#include "doctest.h"
#include "sextic/chains.hpp"
#include "sextic/errors.hpp"

using namespace sextic;

namespace {

BigRat rr(std::mt19937_64& rng, long lo = -40, long hi = 40) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 15);
  return BigRat(num(rng), den(rng));
}

std::vector<Triple> ints(std::initializer_list<std::array<long, 3>> rows) {
  std::vector<Triple> out;
  for (const auto& r : rows) out.push_back({r[0], r[1], r[2]});
  return out;
}

const std::vector<Triple> kChainMN12 = ints({{100958, 425, 113259}, {-7150, -6001, 75081}, {-60010, -715, 59223}});
const std::vector<Triple> kChainF2a =
    ints({{14900543, -2461462, 15194895}, {12571823, 2923703, 13884990}, {4528874, 11547071, 13636239}});
const std::vector<Triple> kChainF2b = ints({{17217348683, -3153451318, 17759190363},
                                            {14274889211, 3650986211, 16104056910},
                                            {11570059211, 7442013386, 15638543835}});

// Direct check of the defining equations, independent of the elimination code.
void check_family1_equations(const PairSeed& s) {
  const auto& a = s.sol1;
  const auto& b = s.sol2;
  CHECK(a.x * a.y == b.x * b.y);
  CHECK(a.x * a.x * a.x + a.y * a.y * a.y - a.z * a.z * a.z == b.x * b.x * b.x + b.y * b.y * b.y - b.z * b.z * b.z);
  CHECK(a.x + a.y + s.h * a.z == b.x + b.y + s.h * b.z);
}

BigRat q_of(const Triple& t) { return t.x * t.x + t.y * t.y + t.z * t.z + t.x * t.y + t.y * t.z + t.z * t.x; }
BigRat c_of(const Triple& t) {
  const BigRat &x = t.x, &y = t.y, &z = t.z;
  return x * x * x + y * y * y + z * z * z +
         BigRat(2) * (x * x * y + x * y * y + x * x * z + x * z * z + y * y * z + y * z * z) + BigRat(2) * x * y * z;
}

}  // namespace

TEST_CASE("phi values") {
  CHECK(phi({1, 1, 1}) == BigRat(-3));
  CHECK(phi({1, 2, 0}) == BigRat(49));
  CHECK(phi({100958, 425, 113259}) == BigRat::parse("179627302488460219913411411364"));
}

TEST_CASE("phi symmetries and homogeneity") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const Triple t{rr(rng), rr(rng), rr(rng)};
    const BigRat l = rr(rng);
    const BigRat v = phi(t);
    CHECK(phi({t.y, t.x, t.z}) == v);
    CHECK(phi({t.z, t.y, t.x}) == v);
    CHECK(phi({t.x, t.z, t.y}) == v);
    CHECK(phi({-t.x, -t.y, -t.z}) == v);
    CHECK(phi({l * t.x, l * t.y, l * t.z}) == pow(l, 6) * v);
  }
}

TEST_CASE("verify_chain") {
  const ChainSolution c = verify_chain(kChainMN12);
  CHECK_FALSE(c.trivial);
  CHECK(c.phi_value == BigRat(4) * BigRat::parse("44906825622115054978352852841"));

  const ChainSolution t = verify_chain(ints({{1, 1, 1}, {1, 1, 1}}));
  CHECK(t.trivial);
  CHECK(verify_chain(ints({{1, 2, 3}, {2, 1, 3}})).trivial);

  try {
    verify_chain(ints({{1, 1, 1}, {1, 2, 0}}));
    FAIL("expected a mismatch");
  } catch (const ChainMismatch& e) {
    CHECK(e.index() == 2);
    CHECK(e.expected() == "-3");
    CHECK(e.actual() == "49");
  }
  CHECK_THROWS_AS(verify_chain(ints({{1, 1, 1}})), std::invalid_argument);
  // length is not limited to three
  CHECK_NOTHROW(verify_chain(ints({{1, 2, 0}, {2, 1, 0}, {0, 1, 2}, {-1, -2, 0}})));
}

TEST_CASE("normalization and equivalence") {
  std::vector<Triple> scaled;
  for (const auto& t : kChainMN12) scaled.push_back({t.x * BigRat(-7, 3), t.y * BigRat(-7, 3), t.z * BigRat(-7, 3)});
  CHECK(normalize_chain(scaled) == kChainMN12);

  std::vector<Triple> shuffled{{kChainMN12[2].y, kChainMN12[2].x, kChainMN12[2].z}, kChainMN12[0], kChainMN12[1]};
  for (auto& t : shuffled) t = {t.x * BigRat(5), t.y * BigRat(5), t.z * BigRat(5)};
  CHECK(chains_equivalent(kChainMN12, shuffled));
  CHECK(chains_equivalent(shuffled, kChainMN12));

  auto broken = kChainMN12;
  broken[1].z += 1;
  CHECK_FALSE(chains_equivalent(kChainMN12, broken));
  CHECK_FALSE(chains_equivalent(kChainMN12, kChainF2a));
  CHECK_THROWS_AS(normalize_chain(ints({{0, 0, 0}, {0, 0, 0}})), DegenerateInput);
}

TEST_CASE("core identities and the negative control") {
  const auto ok = verify_core_identities();
  REQUIRE(ok.size() == 2);
  CHECK(ok[0].pass);
  CHECK(ok[1].pass);
  const auto bad = verify_core_identities(true);
  CHECK_FALSE(bad[0].pass);
  CHECK_FALSE(bad[1].pass);
}

TEST_CASE("family-1 pair at fixed and random parameters") {
  // p = q: the second solution is the first with x and y exchanged
  CHECK_THROWS_WITH_AS(family1_pair(1, 2, 1, 1),
                       "family-1 pair degenerate: p = q makes the second solution the x<->y image of the first",
                       DegenerateInput);
  const PairSeed s = family1_pair(1, 2, 1, 3);
  check_family1_equations(s);
  CHECK(s.h == BigRat(-3));

  const PairSeed s0 = family1_pair(2, 1, 1, 0);
  check_family1_equations(s0);
  CHECK(s0.sol1.y == BigRat(0));

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const PairSeed r = family1_pair(rr(rng), rr(rng), rr(rng), rr(rng));
    check_family1_equations(r);
  }
  CHECK_THROWS_AS(family1_pair(1, 2, 0, 0), DegenerateInput);
}

TEST_CASE("third root agrees with the published closed forms") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const BigRat m = rr(rng), n = rr(rng), p = rr(rng), q = rr(rng);
    const BigRat t = m * m - m * n + n * n;
    if (t * t * t == BigRat(1)) continue;
    const PairSeed s = family1_pair(m, n, p, q);
    CHECK(third_root(s) == family1_gamma3_closed(m, n, p, q));
    ++checked;
  }
  CHECK(checked >= 15);

  for (int i = 0; i < 12; ++i) {
    const BigRat p = rr(rng, -9, 9), q = rr(rng, -9, 9), r = rr(rng, -9, 9), m = rr(rng, -9, 9);
    PairSeed s;
    try {
      s = family2_pair(p, q, r, m);
    } catch (const DegenerateInput&) {
      continue;
    }
    CHECK(third_root(s) == family2_gamma3_closed(p, q, r, m));
  }
}

TEST_CASE("third root: substituting back satisfies the C-equation") {
  const auto [p, q] = family1_pq_choice(3, 5);
  const PairSeed s = family1_pair(3, 5, p, q);
  const BigRat g3 = third_root(s);
  const auto tri = complete_triple(s, g3);
  REQUIRE(tri.has_value());
  const Triple& t = tri->first;
  CHECK(t.x + t.y + s.h * t.z == s.k1);
  CHECK(t.x * t.y == s.k2);
  CHECK(t.x * t.x * t.x + t.y * t.y * t.y - t.z * t.z * t.z == s.k3);
  CHECK(tri->second == Triple{t.y, t.x, t.z});
}

TEST_CASE("third root degeneracies") {
  const MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
  // Q without an e2 term cannot be solved for xy
  const PairSeed s = make_seed({1, 2, 3}, {0, 3, 3}, 1, x + y + z, x + y);
  CHECK_THROWS_AS(third_root(s), DegenerateInput);
  CHECK_THROWS_AS(make_seed({1, 2, 3}, {2, 1, 3}, 1, x * y, x + y), DegenerateInput);
  CHECK_THROWS_AS(make_seed({1, 2, 3}, {0, 3, 3}, 1, x - y, x + y), std::invalid_argument);

  // t^3 = 1 kills the leading coefficient (m = n = 1 gives t = 1)
  const PairSeed lead0 = family1_pair(1, 1, 2, 3);
  CHECK_THROWS_AS(third_root(lead0), DegenerateInput);
}

TEST_CASE("completion: repeated root and the generic non-square case") {
  const auto [p, q] = family1_pq_choice(1, 2);
  const PairSeed s = family1_pair(1, 2, p, q);
  const BigRat g3 = third_root(s);
  // force a zero discriminant by moving k2 to e1^2/4
  const BigRat e1 = s.k1 - s.h * g3;
  PairSeed forced = s;
  forced.k2 = e1 * e1 / BigRat(4);
  const auto tri = complete_triple(forced, g3);
  REQUIRE(tri.has_value());
  CHECK(tri->first == tri->second);
  CHECK(tri->first.x == tri->first.y);

  std::mt19937_64 rng(5150);
  int squares = 0;
  for (int i = 0; i < 20; ++i) {
    try {
      const PairSeed r = family1_pair(rr(rng), rr(rng), rr(rng), rr(rng));
      if (complete_triple(r, third_root(r))) ++squares;
    } catch (const DegenerateInput&) {
    }
  }
  CHECK(squares == 0);
}

TEST_CASE("family-1 chain for m=1, n=2") {
  const ChainSolution c = family1_chain(1, 2);
  CHECK(c.triples == kChainMN12);
  CHECK_FALSE(c.trivial);
  CHECK(chains_equivalent(family1_chain_by_elimination(1, 2).triples, kChainMN12));
}

TEST_CASE("family-1 chain at (2,1) and random rational parameters") {
  const ChainSolution c21 = family1_chain(2, 1);
  CHECK_FALSE(c21.trivial);
  for (const auto& t : c21.triples) CHECK(phi(t) == c21.phi_value);

  std::mt19937_64 rng(909);
  for (int i = 0; i < 20; ++i) {
    const BigRat m = rr(rng, -12, 12), n = rr(rng, -12, 12);
    ChainSolution c;
    try {
      c = family1_chain(m, n);
    } catch (const DegenerateInput&) {
      continue;
    }
    const auto& t = c.triples;
    CHECK(t[0].x * t[0].y == t[1].x * t[1].y);
    CHECK(t[1].x * t[1].y == t[2].x * t[2].y);
    CHECK(phi(t[1]) == c.phi_value);
    CHECK(phi(t[2]) == c.phi_value);
    if (i < 5) CHECK(chains_equivalent(family1_chain_by_elimination(m, n).triples, t));
  }
  CHECK_THROWS_AS(family1_chain(1, 1), DegenerateInput);
}

TEST_CASE("family-1 completion quartic") {
  // at the (p,q) choice the quartic is a square
  std::mt19937_64 rng(1212);
  for (int i = 0; i < 4; ++i) {
    const BigRat m = rr(rng, -6, 6), n = rr(rng, -6, 6);
    const BigRat t = m * m - m * n + n * n;
    if (t * t * t == BigRat(1)) continue;
    const MPoly f = family1_quartic(m, n);
    CHECK(f.total_degree() == 4);
    const auto [p, q] = family1_pq_choice(m, n);
    CHECK(is_rational_square(poly_eval(f, {{"p", p}, {"q", q}})));
  }
  CHECK_THROWS_AS(family1_quartic(1, 1), DegenerateInput);
}

TEST_CASE("family-2 pair") {
  const PairSeed s = family2_pair(3, 0, 4, 1);
  CHECK(q_of(s.sol1) == q_of(s.sol2));
  CHECK(c_of(s.sol1) == c_of(s.sol2));
  CHECK(s.sol1.x + s.sol1.y + s.h * s.sol1.z == s.sol2.x + s.sol2.y + s.h * s.sol2.z);
  CHECK(s.h == BigRat(7, 3));

  // (1,1,1,1): h = 1 but every f2 term carries a factor v - w, so both solutions coincide
  CHECK_THROWS_WITH_AS(family2_pair(1, 1, 1, 1),
                       "family-2 pair degenerate: the terms linear in m vanish (m = 0 or f2 = 0 at p, q, r)",
                       DegenerateInput);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const BigRat p = rr(rng), q = rr(rng), r = rr(rng), m = rr(rng);
    PairSeed u;
    try {
      u = family2_pair(p, q, r, m);
    } catch (const DegenerateInput&) {
      continue;
    }
    CHECK(q_of(u.sol1) == q_of(u.sol2));
    CHECK(c_of(u.sol1) == c_of(u.sol2));
    CHECK(u.sol1.x + u.sol1.y + u.h * u.sol1.z == u.sol2.x + u.sol2.y + u.h * u.sol2.z);
  }
  CHECK_THROWS_AS(family2_pair(1, 0, 1, 1), DegenerateInput);
}

TEST_CASE("family-2 condition quartic") {
  const ConditionQuartic cq = family2_condition_quartic(3, 4);
  REQUIRE_FALSE(cq.degenerate);
  const MPoly m = MPoly::var("m");
  const MPoly published = MPoly(BigRat::parse("4916053296")) * pow(m, 4) -
                          MPoly(BigRat::parse("16574603472")) * m * m - MPoly(BigRat::parse("106422358224"));
  // same polynomial up to a rational square factor
  const BigRat ratio = published.terms().rbegin()->second / cq.quartic.terms().rbegin()->second;
  CHECK(cq.quartic * MPoly(ratio) == published);
  CHECK(is_rational_square(ratio));

  // p = r makes the h denominator p^2 - pr vanish
  const ConditionQuartic c11 = family2_condition_quartic(1, 1);
  CHECK(c11.degenerate);
  CHECK(c11.reason.find("h denominator") != std::string::npos);

  // (1,2): square values match successful completions
  const ConditionQuartic c12 = family2_condition_quartic(1, 2);
  REQUIRE_FALSE(c12.degenerate);
  std::mt19937_64 rng(66);
  for (int i = 0; i < 10; ++i) {
    const BigRat mv = rr(rng);
    const PairSeed s = family2_pair(1, 0, 2, mv);
    const bool completes = complete_triple(s, third_root(s)).has_value();
    CHECK(completes == is_rational_square(poly_eval(c12.quartic, {{"m", mv}})));
  }
  CHECK(family2_condition_quartic(0, 0).degenerate);
  CHECK(family2_condition_quartic(0, 0).quartic.is_zero());
}

TEST_CASE("family-2 chains for the four square values") {
  const ChainSolution a = family2_chain(3, 4, BigRat(14911, 4695));
  CHECK_FALSE(a.trivial);
  CHECK(chains_equivalent(a.triples, kChainF2a));

  const ChainSolution b = family2_chain(3, 4, BigRat(135679, 50151));
  CHECK_FALSE(b.trivial);
  CHECK(chains_equivalent(b.triples, kChainF2b));

  CHECK(family2_chain(3, 4, BigRat(37, 3)).trivial);
  CHECK(family2_chain(3, 4, BigRat(481, 87)).trivial);
  CHECK_THROWS_AS(family2_chain(3, 4, 1), DegenerateInput);
}

TEST_CASE("format_chain layout") {
  const std::string s = format_chain(verify_chain(kChainMN12));
  CHECK(s.find("(x_1, y_1, z_1) = (100958, 425, 113259)") != std::string::npos);
  CHECK(s.find("(x_3, y_3, z_3) = (-60010, -715, 59223)") != std::string::npos);
}
