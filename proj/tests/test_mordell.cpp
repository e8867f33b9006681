#include <random>

#include "doctest.h"
#include "sextic/errors.hpp"
#include "sextic/heights.hpp"
#include "sextic/quartic.hpp"
#include "sextic/regulator.hpp"

using namespace sextic;

namespace {

CurvePoint pt(const char* x, const char* y) { return CurvePoint::affine(BigRat::parse(x), BigRat::parse(y)); }

const MordellCurve& curve1() {
  static const MordellCurve e(BigRat::parse("44906825622115054978352852841"));
  return e;
}
const MordellCurve& curve2() {
  static const MordellCurve e(BigRat::parse("60881141602872940726223731917150516833400"));
  return e;
}

const std::vector<CurvePoint>& seven() {
  static const std::vector<CurvePoint> v{
      pt("42907150", "-211912492824721"),  pt("48135075", "211912569590346"),   pt("11434402122", "1240928701242633"),
      pt("-450561081", "211696384806720"), pt("-536829150", "211546966949721"), pt("-42344445", "211912127298846"),
      pt("-3553972230", "-4195525176279")};
  return v;
}

const std::vector<CurvePoint>& nine() {
  static const std::vector<CurvePoint> v{pt("-36677120373866", "107436818637424863748"),
                                         pt("226412186327985", "-3415747486107335266755"),
                                         pt("-37401656636490", "-92523324542363200620"),
                                         pt("36756276620569", "332475185129096665153"),
                                         pt("174559636636770", "-2319461032255991683920"),
                                         pt("40595586917970", "-357467113076423815080"),
                                         pt("52295229628054", "451550293014200834692"),
                                         pt("61756808264886", "-544440667643008046316"),
                                         pt("157458619905969", "-1991177257485343473603")};
  return v;
}

std::vector<Triple> ints(std::initializer_list<std::array<long, 3>> rows) {
  std::vector<Triple> out;
  for (const auto& r : rows) out.push_back({r[0], r[1], r[2]});
  return out;
}

bool within(const BigReal& a, const BigReal& b, const BigReal& tol) { return abs(a - b) <= tol; }

BigReal R(const char* s) { return BigReal::parse(s, 256); }

// Points a P + b Q with small coefficients.
std::vector<CurvePoint> combos(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q, int range) {
  std::vector<CurvePoint> out;
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b) out.push_back(add(e, scalar_mul(e, a, p), scalar_mul(e, b, q)));
  return out;
}

}  // namespace

TEST_CASE("on_curve") {
  CHECK(on_curve(curve1(), seven()[0]));
  CHECK_FALSE(on_curve(MordellCurve(1), CurvePoint::affine(1, 1)));
  CHECK(on_curve(MordellCurve(1), CurvePoint::at_infinity()));
  CHECK_THROWS_AS(MordellCurve(0), DegenerateInput);
}

TEST_CASE("group law basics") {
  const MordellCurve e(2);
  const CurvePoint p = CurvePoint::affine(-1, 1);
  const CurvePoint o = CurvePoint::at_infinity();
  CHECK(add(e, p, o) == p);
  CHECK(add(e, o, p) == p);
  CHECK(add(e, p, negate(e, p)).infinity);
  CHECK(scalar_mul(e, 0, p).infinity);
  CHECK(scalar_mul(e, 1, p) == p);
  CHECK(scalar_mul(e, -3, p) == negate(e, scalar_mul(e, 3, p)));
  CHECK(scalar_mul(e, 5, p) == add(e, scalar_mul(e, 2, p), scalar_mul(e, 3, p)));
  CHECK(on_curve(e, scalar_mul(e, 7, p)));
  CHECK_THROWS_AS(add(e, p, CurvePoint::affine(1, 1)), NotOnCurve);

  // (0,1) on y^2 = x^3 + 1 has order 3, so 6T = O as well
  const MordellCurve one(1);
  const CurvePoint t = CurvePoint::affine(0, 1);
  CHECK(scalar_mul(one, 3, t).infinity);
  CHECK(scalar_mul(one, 6, t).infinity);
  CHECK_FALSE(scalar_mul(one, 2, t).infinity);
  // (2,3) has order 6
  CHECK(scalar_mul(one, 6, CurvePoint::affine(2, 3)).infinity);
  CHECK_FALSE(scalar_mul(one, 3, CurvePoint::affine(2, 3)).infinity);
}

TEST_CASE("group law axioms on random points") {
  std::mt19937_64 rng(4242);
  struct Case {
    MordellCurve e;
    CurvePoint p, q;
  };
  const std::vector<Case> cases{{MordellCurve(2), CurvePoint::affine(-1, 1), CurvePoint::affine(-1, 1)},
                                {MordellCurve(-2), CurvePoint::affine(3, 5), CurvePoint::affine(3, -5)},
                                {MordellCurve(17), CurvePoint::affine(-2, 3), CurvePoint::affine(2, 5)},
                                {curve1(), seven()[0], seven()[1]}};
  int checked = 0;
  for (const auto& c : cases) {
    const auto pool = combos(c.e, c.p, c.q, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 25; ++i) {
      const CurvePoint& a = pool[pick(rng)];
      const CurvePoint& b = pool[pick(rng)];
      const CurvePoint& d = pool[pick(rng)];
      CHECK(add(c.e, add(c.e, a, b), d) == add(c.e, a, add(c.e, b, d)));
      CHECK(add(c.e, a, b) == add(c.e, b, a));
      CHECK(add(c.e, a, negate(c.e, a)).infinity);
      CHECK(on_curve(c.e, add(c.e, a, b)));
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("general Weierstrass model of the quartic") {
  const WeierstrassCurve w{0, 1, 0, BigRat::parse("51492677220"), BigRat::parse("-3062315437673472")};
  const CurvePoint g = CurvePoint::affine(101376, 56565600);
  REQUIRE(on_curve(w, g));
  const CurvePoint g2 = add(w, g, g);
  CHECK_FALSE(g2.infinity);
  CHECK(on_curve(w, g2));
  CHECK(scalar_mul(w, 2, g) == g2);
  for (const auto& u : published_generators()) CHECK(on_curve(w, CurvePoint::affine(u.u, u.v)));

  // long form with a1, a3 nonzero
  const WeierstrassCurve l{1, -1, 1, 2, 5};
  const CurvePoint q = CurvePoint::affine(-1, 1);
  REQUIRE(on_curve(l, q));
  REQUIRE_FALSE(l.discriminant().is_zero());
  CHECK(add(l, q, negate(l, q)).infinity);
  CHECK(add(l, add(l, q, q), q) == add(l, q, add(l, q, q)));
}

TEST_CASE("curves from chains") {
  const ChainSolution c1 = family1_chain(1, 2);
  CHECK(curve_from_chain(c1).k() == BigRat::parse("44906825622115054978352852841"));
  const ChainSolution c2 =
      verify_chain(ints({{14900543, -2461462, 15194895}, {12571823, 2923703, 13884990}, {4528874, 11547071, 13636239}}));
  CHECK(curve_from_chain(c2).k() == BigRat::parse("60881141602872940726223731917150516833400"));
  const ChainSolution small = verify_chain(ints({{1, 2, 0}, {2, 1, 0}}));
  const MordellCurve e = curve_from_chain(small);
  CHECK(e.k() == BigRat(49, 4));
  CHECK_THROWS_AS(curve_from_chain(verify_chain(ints({{1, 1, 0}, {1, 0, 1}}))), DegenerateInput);

  const IntegralRescale ir = integral_rescale(e);
  CHECK(ir.lambda == BigRat(2));
  CHECK(ir.curve.k() == BigRat(784));
  CHECK(on_curve(ir.curve, ir.map(CurvePoint::affine(2, BigRat(9, 2)))));
}

TEST_CASE("points from chains") {
  const ChainSolution c1 = family1_chain(1, 2);
  const ChainPoints p1 = points_from_chain(c1, curve_from_chain(c1));
  CHECK(p1.emitted == 9);
  CHECK(p1.points == seven());

  const ChainSolution c2 =
      verify_chain(ints({{14900543, -2461462, 15194895}, {12571823, 2923703, 13884990}, {4528874, 11547071, 13636239}}));
  const ChainPoints p2 = points_from_chain(c2, curve_from_chain(c2));
  CHECK(p2.points.size() == 9);
  // the listed points are the images under y -> -y (the chain scaled by -1)
  for (const auto& p : nine()) {
    CHECK(on_curve(curve2(), p));
    CHECK(std::find(p2.points.begin(), p2.points.end(), negate(curve2(), p)) != p2.points.end());
  }

  const ChainSolution small = verify_chain(ints({{1, 2, 0}, {2, 1, 0}}));
  const ChainPoints ps = points_from_chain(small, curve_from_chain(small));
  CHECK(std::find(ps.points.begin(), ps.points.end(), CurvePoint::affine(2, BigRat(9, 2))) != ps.points.end());
  CHECK_THROWS_AS(points_from_chain(small, MordellCurve(1)), std::invalid_argument);
}

TEST_CASE("naive height") {
  CHECK(naive_height(CurvePoint::affine(1, 1)).is_zero());
  CHECK(naive_height(seven()[0]).fixed(30) == log(BigReal::from_long(42907150, 256)).fixed(30));
  CHECK(naive_height(CurvePoint::affine(BigRat::parse("498157004/529"), 0)).fixed(30) ==
        log(BigReal::from_long(498157004, 256)).fixed(30));
  CHECK_THROWS_AS(naive_height(CurvePoint::at_infinity()), std::invalid_argument);
}

TEST_CASE("minimal models") {
  const MinimalModel a = minimal_model(MordellCurve(128));  // 2 * 2^6
  CHECK(a.curve == WeierstrassCurve{0, 0, 0, 0, 2});
  const MinimalModel b = minimal_model(MordellCurve(80));  // 80 = 16 mod 64
  CHECK(b.curve == WeierstrassCurve{0, 0, 1, 0, 1});
  CHECK(on_curve(b.curve, b.map(CurvePoint::affine(-4, 4))));
  const MinimalModel c = minimal_model(MordellCurve(BigRat(7 * 15625)));  // 7 * 5^6
  CHECK(c.curve == WeierstrassCurve{0, 0, 0, 0, 7});
  const MinimalModel d = minimal_model(MordellCurve(BigRat(3, 64)));
  CHECK(d.curve.is_integral());

  const MinimalModel m2 = minimal_model(curve2());
  CHECK(m2.curve.a6 == curve2().k() / BigRat(BigInt("2565726409")));  // 37^6
}

TEST_CASE("heights of torsion points vanish") {
  HeightCalculator hc(MordellCurve(1), 256);
  for (const auto& p : {CurvePoint::affine(0, 1), CurvePoint::affine(2, 3), CurvePoint::affine(-1, 0)}) {
    const HeightValue h = hc.height(p);
    CHECK(abs(h.value) <= h.error);
    CHECK(h.error <= pow2(-128, 256));
  }
  CHECK(hc.height(CurvePoint::at_infinity()).value.is_zero());
}

TEST_CASE("height agrees with the doubling limit") {
  // independent oracle: h(x(2^n P)) / 4^n from exact doubling
  const MordellCurve e(2);
  const CurvePoint p = CurvePoint::affine(-1, 1);
  const HeightValue h = canonical_height(e, p, 256);
  CurvePoint q = p;
  BigReal scale = BigReal::from_long(1, 256);
  for (int n = 1; n <= 8; ++n) {
    q = add(e, q, q);
    scale *= BigReal::from_long(4, 256);
  }
  CHECK(abs(naive_height(q) / scale - h.value) < R("0.0005"));

  // k = 17 with its two generators
  const MordellCurve f(17);
  for (const auto& g : {CurvePoint::affine(-2, 3), CurvePoint::affine(2, 5), CurvePoint::affine(8, 23)}) {
    CurvePoint r = g;
    BigReal s = BigReal::from_long(1, 256);
    for (int n = 1; n <= 7; ++n) {
      r = add(f, r, r);
      s *= BigReal::from_long(4, 256);
    }
    CHECK(abs(naive_height(r) / s - canonical_height(f, g, 256).value) < R("0.002"));
  }
}

TEST_CASE("height values frozen from an independent system") {
  // reference values computed with PARI/GP ellheight (x-limit normalization)
  const HeightValue h = canonical_height(curve1(), seven()[0], 256);
  CHECK(within(h.value, R("20.281518750818997580"), R("1e-17")));
}

TEST_CASE("height is invariant under change of model") {
  const MordellCurve e(2), e6(BigRat(2 * 729 * 64));  // 6^6 * 2
  const CurvePoint p = CurvePoint::affine(-1, 1);
  const CurvePoint p6 = CurvePoint::affine(-36, 216);
  REQUIRE(on_curve(e6, p6));
  CHECK(within(canonical_height(e, p, 256).value, canonical_height(e6, p6, 256).value, pow2(-120, 256)));
}

TEST_CASE("quadratic behaviour within error bounds") {
  HeightCalculator hc(curve1(), 256);
  const auto& e = curve1();
  for (std::size_t i = 0; i < 3; ++i) {
    const CurvePoint& p = seven()[i];
    const HeightValue h1 = hc.height(p);
    for (long n = 2; n <= 5; ++n) {
      const HeightValue hn = hc.height(scalar_mul(e, n, p));
      const BigReal n2 = BigReal::from_long(n * n, 256);
      CHECK(abs(hn.value - n2 * h1.value) <= hn.error + n2 * h1.error);
    }
  }
  for (std::size_t i = 0; i + 1 < seven().size(); ++i) {
    const CurvePoint& p = seven()[i];
    const CurvePoint& q = seven()[i + 1];
    const HeightValue s = hc.height(add(e, p, q)), d = hc.height(subtract(e, p, q));
    const HeightValue hp = hc.height(p), hq = hc.height(q);
    const BigReal two = BigReal::from_long(2, 256);
    CHECK(abs(s.value + d.value - two * hp.value - two * hq.value) <= s.error + d.error + two * (hp.error + hq.error));
  }
}

TEST_CASE("height pairing") {
  HeightCalculator hc(curve1(), 256);
  const CurvePoint& p = seven()[0];
  const CurvePoint& q = seven()[4];
  const HeightValue hp = hc.height(p);
  const HeightValue pp = hc.pairing(p, p);
  CHECK(abs(pp.value - hp.value) <= pp.error + hp.error);
  const HeightValue pm = hc.pairing(p, negate(curve1(), p));
  CHECK(abs(pm.value + hp.value) <= pm.error + hp.error);
  const HeightValue a = hc.pairing(p, q), b = hc.pairing(q, p);
  CHECK(abs(a.value - b.value) <= a.error + b.error);
  const HeightValue a2 = height_pairing(curve1(), p, q, 256);
  CHECK(abs(a.value - a2.value) <= a.error + a2.error);
}

TEST_CASE("height versus naive height stays bounded") {
  HeightCalculator hc(MordellCurve(17), 128);
  const MordellCurve e(17);
  const CurvePoint g = CurvePoint::affine(-2, 3);
  BigReal worst = BigReal::from_long(0, 128);
  for (long n = 1; n <= 12; ++n) {
    const CurvePoint q = scalar_mul(e, n, g);
    worst = max(worst, abs(hc.height(q).value - naive_height(q, 128)));
  }
  CHECK(worst < BigReal::from_long(5, 128));
}

TEST_CASE("normalization conventions") {
  const HeightValue big = canonical_height(curve1(), seven()[0], 256, HeightNormalization::kLimitX);
  const HeightValue half = canonical_height(curve1(), seven()[0], 256, HeightNormalization::kHalf);
  CHECK(within(big.value, half.value * BigReal::from_long(2, 256), pow2(-150, 256)));
  CHECK(parse_normalization(to_string(HeightNormalization::kHalf)) == HeightNormalization::kHalf);
  CHECK_THROWS_AS(parse_normalization("other"), std::invalid_argument);
}

TEST_CASE("factoring budget surfaces the cofactor") {
  const BigInt a("1000000000000000000117"), b("1000000000000000000193");
  FactorBudget tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 10;
  tiny.ecm_curves = 0;
  try {
    HeightCalculator hc(MordellCurve(BigRat(BigInt(a * b))), 128, HeightNormalization::kLimitX, tiny);
    FAIL("expected FactorizationIncomplete");
  } catch (const FactorizationIncomplete& e) {
    CHECK(e.cofactor() == a * b);
    CHECK(std::string(e.what()).find("height requires factored discriminant") != std::string::npos);
  }
}

TEST_CASE("regulators reproduce the published values") {
  HeightCalculator h1(curve1(), 256);
  const std::vector<CurvePoint> six(seven().begin(), seven().begin() + 6);
  const RegulatorReport r1 = regulator(h1, six);
  CHECK(within(r1.determinant, R("10390179.16"), R("0.05")));
  // PARI/GP: 10390179.162662826852
  CHECK(within(r1.determinant, R("10390179.162662826852"), R("1e-9")));
  CHECK(r1.independent);
  CHECK(r1.determinant > r1.error_bound);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(r1.gram[i][i] == r1.heights[i]);
    for (std::size_t j = 0; j < 6; ++j) CHECK(r1.gram[i][j] == r1.gram[j][i]);
  }

  const auto& P = nine();
  const RegulatorReport r2 = regulator(curve2(), {P[0], P[1], P[2], P[3], P[4], P[7]}, 256);
  CHECK(within(r2.determinant, R("11390832.16"), R("0.05")));
  // PARI/GP: 11390832.163577923807
  CHECK(within(r2.determinant, R("11390832.163577923807"), R("1e-9")));
  CHECK(r2.independent);
}

TEST_CASE("singular Gram matrices") {
  const auto& p = seven()[0];
  const RegulatorReport d = regulator(curve1(), {p, p}, 256);
  CHECK(abs(d.determinant) <= d.error_bound);
  CHECK_FALSE(d.independent);
  const RegulatorReport n = regulator(curve1(), {p, negate(curve1(), p), seven()[1]}, 256);
  CHECK(abs(n.determinant) <= n.error_bound);
  CHECK_FALSE(n.independent);
}

TEST_CASE("independence reports") {
  const RegulatorReport r1 = independence_report(curve1(), seven(), 256);
  CHECK(r1.witness_subset.size() == 6);
  CHECK_FALSE(r1.independent);
  const RegulatorReport r2 = independence_report(curve2(), nine(), 256);
  CHECK(r2.witness_subset.size() == 6);
  const RegulatorReport t = independence_report(MordellCurve(1), {CurvePoint::affine(0, 1)}, 128);
  CHECK(t.witness_subset.empty());
  const RegulatorReport none = independence_report(MordellCurve(1), {}, 128);
  CHECK(none.witness_subset.empty());
  CHECK(none.independent);
}

TEST_CASE("torsion test") {
  CHECK(torsion_test(MordellCurve(1), CurvePoint::affine(0, 1), 128));
  CHECK(torsion_test(MordellCurve(1), CurvePoint::affine(2, 3), 128));
  CHECK_FALSE(torsion_test(MordellCurve(2), CurvePoint::affine(-1, 1), 128));
  CHECK(torsion_test(MordellCurve(2), CurvePoint::at_infinity(), 128));
  CHECK_FALSE(torsion_test(curve1(), seven()[6], 128));
}

TEST_CASE("normalization calibration") {
  const std::vector<CurvePoint> six(seven().begin(), seven().begin() + 6);
  CHECK(calibrate_normalization(curve1(), six, R("10390179.16"), R("0.05"), 256) == HeightNormalization::kLimitX);
  CHECK(calibrate_normalization(curve1(), six, R("162346.549"), R("0.05"), 256) == HeightNormalization::kHalf);
  CHECK_FALSE(calibrate_normalization(curve1(), six, R("1"), R("0.05"), 256).has_value());
}
