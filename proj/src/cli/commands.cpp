#include "sextic/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sextic/errors.hpp"

namespace sextic::cli {

namespace {

template <class F>
void guarded(RunReport& r, F&& body) {
  try {
    body();
  } catch (const FactorizationIncomplete& e) {
    r.exit_code = kBudgetExceeded;
    r.error = e.what();
    r.results["unfactored_cofactor"] = e.cofactor().get_str();
  } catch (const DegenerateInput& e) {
    r.exit_code = kDegenerate;
    r.error = e.what();
  } catch (const ChainMismatch& e) {
    r.exit_code = kCheckFailed;
    r.error = e.what();
    r.results["mismatch"] = Json{{"triple", e.index()}, {"expected_phi", e.expected()}, {"actual_phi", e.actual()}};
  } catch (const nlohmann::json::exception& e) {
    r.exit_code = kCheckFailed;
    r.error = std::string("malformed JSON: ") + e.what();
  } catch (const std::exception& e) {
    r.exit_code = kCheckFailed;
    r.error = e.what();
  }
  r.finalize();
}

Check& check(RunReport& r, const std::string& group, const std::string& name, bool pass, std::string expected,
             std::string actual, bool mandatory = true) {
  return r.add_check({name, group, pass, std::move(expected), std::move(actual), "exact", mandatory});
}

Check& check_equal(RunReport& r, const std::string& group, const std::string& name, const std::string& expected,
                   const std::string& actual, bool mandatory = true) {
  return check(r, group, name, expected == actual, expected, actual, mandatory);
}

std::string join(const std::vector<BigRat>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : ", ") + q.str();
  return "{" + s + "}";
}

std::string join_points(const std::vector<CurvePoint>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : ", ") + (p.infinity ? std::string("O") : "(" + p.x.str() + ", " + p.y.str() + ")");
  return "[" + s + "]";
}

bool same_point_set(const std::vector<CurvePoint>& a, const std::vector<CurvePoint>& b) {
  return a.size() == b.size() && std::is_permutation(a.begin(), a.end(), b.begin());
}

std::vector<Triple> scaled(const std::vector<Triple>& ts, const BigRat& c) {
  std::vector<Triple> out;
  for (const auto& t : ts) out.push_back({c * t.x, c * t.y, c * t.z});
  return out;
}

std::vector<CurvePoint> pick(const std::vector<CurvePoint>& pts, const std::vector<std::size_t>& one_based) {
  std::vector<CurvePoint> out;
  for (std::size_t i : one_based) {
    if (i < 1 || i > pts.size())
      throw std::invalid_argument("subset index " + std::to_string(i) + " outside 1.." + std::to_string(pts.size()));
    out.push_back(pts[i - 1]);
  }
  return out;
}

void require_on_curve(const MordellCurve& e, const std::vector<CurvePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!on_curve(e, pts[i]))
      throw NotOnCurve("point " + std::to_string(i + 1) + " is not on y^2 = x^3 + " + e.k().str());
}

Json bad_primes_json(const MinimalModel& m) {
  Json out = Json::array();
  for (const auto& pp : m.bad_primes) out.push_back(Json{{"p", pp.prime.get_str()}, {"v", pp.exponent}});
  return out;
}

}  // namespace

long default_precision() {
  const char* env = std::getenv("SEXTIC_PRECISION");
  if (env == nullptr || *env == '\0') return BigReal::kDefaultPrecision;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 32) throw std::invalid_argument(std::string("SEXTIC_PRECISION must be an integer >= 32, got '") + env + "'");
  return v;
}

FactorBudget extended_budget() {
  FactorBudget b;
  b.ecm_curves = 200;
  b.ecm_b1 = 11000;
  return b;
}

// ---- verify-identities --------------------------------------------------------

RunReport cmd_verify_identities(bool skip_maps, bool corrupt_phi) {
  RunReport r;
  r.command = "verify-identities";
  r.inputs = Json{{"skip_maps", skip_maps}, {"corrupt_phi", corrupt_phi}};
  guarded(r, [&] {
    for (const auto& c : verify_core_identities(corrupt_phi))
      check(r, "identities", c.name, c.pass, "exact expansion agrees", c.detail);
    if (!skip_maps)
      for (const auto& c : verify_birational_maps()) check(r, "birational maps", c.name, c.pass, "reduces to 0", c.detail);
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    r.results = Json{{"checks", r.checks.size()}, {"passed", passed}};
  });
  return r;
}

// ---- gen-chain ----------------------------------------------------------------

RunReport cmd_gen_chain(int family, const std::vector<std::string>& params) {
  RunReport r;
  r.command = "gen-chain";
  r.inputs = Json{{"family", family}, {"params", params}};
  guarded(r, [&] {
    std::vector<BigRat> v;
    for (const auto& s : params) v.push_back(rat_from_json(s));
    ChainSolution chain;
    if (family == 1) {
      if (v.size() != 2) throw std::invalid_argument("family 1 takes two parameters: m n");
      r.inputs["params"] = Json{{"m", v[0].str()}, {"n", v[1].str()}};
      chain = family1_chain(v[0], v[1]);
    } else if (family == 2) {
      if (v.size() != 3) throw std::invalid_argument("family 2 takes three parameters: p r m");
      r.inputs["params"] = Json{{"p", v[0].str()}, {"r", v[1].str()}, {"m", v[2].str()}};
      chain = family2_chain(v[0], v[1], v[2]);
    } else {
      throw std::invalid_argument("family must be 1 or 2");
    }
    r.results = Json{{"chain", to_json(chain)},
                     {"phi", to_json(chain.phi_value)},
                     {"k", to_json(chain.phi_value / BigRat(4))},
                     {"trivial", chain.trivial}};
    if (chain.trivial) {
      r.exit_code = kDegenerate;
      r.error = "trivial chain: two members coincide up to exchanging x and y";
    }
  });
  return r;
}

// ---- chain-points -------------------------------------------------------------

RunReport cmd_chain_points(const std::string& chain_file) {
  RunReport r;
  r.command = "chain-points";
  r.inputs = Json{{"chain_file", chain_file}};
  guarded(r, [&] {
    const ChainSolution chain = verify_chain(triples_from_json(parse_json_file(chain_file)));
    const MordellCurve e = curve_from_chain(chain);
    const ChainPoints cp = points_from_chain(chain, e);
    Json pts = Json::array();
    for (std::size_t i = 0; i < cp.points.size(); ++i) {
      pts.push_back(to_json(cp.points[i]));
      check(r, "points", "point " + std::to_string(i + 1) + " on curve", on_curve(e, cp.points[i]), "on curve",
            on_curve(e, cp.points[i]) ? "on curve" : "off curve");
    }
    r.results = Json{{"curve", curve_to_json(e)},
                     {"points", pts},
                     {"emitted", cp.emitted},
                     {"distinct", cp.points.size()},
                     {"trivial", chain.trivial}};
  });
  return r;
}

// ---- regulator ----------------------------------------------------------------

RunReport cmd_regulator(const RegulatorOptions& o) {
  RunReport r;
  r.command = "regulator";
  Json subset = Json::array();
  for (std::size_t i : o.subset) subset.push_back(i);
  r.inputs = Json{{"curve_file", o.curve_file},
                  {"points_file", o.points_file},
                  {"precision", o.precision},
                  {"subset", subset},
                  {"normalization", to_string(o.normalization)}};
  guarded(r, [&] {
    const MordellCurve e = curve_from_json(parse_json_file(o.curve_file));
    std::vector<CurvePoint> pts = points_from_json(parse_json_file(o.points_file));
    require_on_curve(e, pts);
    if (!o.subset.empty()) pts = pick(pts, o.subset);
    const HeightCalculator hc(e, o.precision, o.normalization, o.budget);
    const RegulatorReport rep = independence_report(hc, pts);
    r.results = Json{{"curve", curve_to_json(e)},
                     {"bad_primes", bad_primes_json(hc.model())},
                     {"report", to_json(rep)},
                     {"independent_subset_size", rep.witness_subset.size()}};
  });
  return r;
}

// ---- search-quartic -----------------------------------------------------------

RunReport cmd_search_quartic(const SearchOptions& o) {
  RunReport r;
  r.command = "search-quartic";
  r.inputs = Json{{"coefficients", o.coefficients}, {"height", o.height}, {"shards", o.shards}};
  guarded(r, [&] {
    const QuarticCurve f = QuarticCurve::parse(o.coefficients);
    r.inputs["coefficients"] = f.str();
    SieveOptions so;
    so.shards = std::max(1u, o.shards);
    so.progress = o.progress;
    const auto found = search_square_values(f, o.height, so);
    Json pts = Json::array();
    for (const auto& p : found) pts.push_back(to_json(p));
    r.results = Json{{"points", pts}, {"count", found.size()}};
  });
  return r;
}

// ---- reproduce ----------------------------------------------------------------

namespace {

struct Reproducer {
  const ReproduceOptions& o;
  const ExpectedValues& ev;
  RunReport& r;

  void note(const std::string& s) const {
    if (o.progress) o.progress(s);
  }

  void identities() {
    const std::string g = "identities";
    for (const auto& c : verify_core_identities()) check(r, g, c.name, c.pass, "exact expansion agrees", c.detail);

    // family-1 pair: three defining equations at random rational points
    std::mt19937_64 rng(kFamily1PairSeed);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    auto rnd = [&] { return BigRat(num(rng), den(rng)); };
    int done = 0, good = 0;
    while (done < 20) {
      const BigRat m = rnd(), n = rnd(), p = rnd(), q = rnd();
      PairSeed s;
      try {
        s = family1_pair(m, n, p, q);
      } catch (const DegenerateInput&) {
        continue;
      }
      ++done;
      const Triple &a = s.sol1, &b = s.sol2;
      const BigRat h = -(m * m - m * n + n * n);
      const bool ok = s.h == h && a.x * a.y == b.x * b.y &&
                      a.x * a.x * a.x + a.y * a.y * a.y - a.z * a.z * a.z ==
                          b.x * b.x * b.x + b.y * b.y * b.y - b.z * b.z * b.z &&
                      a.x + a.y + h * a.z == b.x + b.y + h * b.z;
      good += ok ? 1 : 0;
    }
    check_equal(r, g, "family-1 pair satisfies its three equations at 20 random points (seed " +
                          std::to_string(kFamily1PairSeed) + ")",
                "20", std::to_string(good));

    for (const auto& c : verify_birational_maps()) check(r, g, c.name, c.pass, "reduces to 0", c.detail);

    const MPoly u = MPoly::var("u"), v = MPoly::var("v");
    const std::string w = "weierstrass_model";
    const MPoly model = v * v - (u * u * u + MPoly(ev.rat(w, "a2")) * u * u + MPoly(ev.rat(w, "a4")) * u +
                                 MPoly(ev.rat(w, "a6")));
    check_equal(r, g, ev.tag(w), model.str(), weierstrass_model_poly().str());
  }

  void family1() {
    const std::string g = "family 1";
    const std::string name = "chain_family1_m1_n2";
    const Json& prm = ev.entry(name).at("params");
    const ChainSolution c = family1_chain(rat_from_json(prm.at("m")), rat_from_json(prm.at("n")));
    const auto want = ev.triples(name);
    check(r, g, ev.tag(name), chains_equivalent(c.triples, want), to_json(verify_chain(want)).dump(),
          to_json(c).dump());
    const ChainSolution el = family1_chain_by_elimination(rat_from_json(prm.at("m")), rat_from_json(prm.at("n")));
    check(r, g, "elimination route gives the same chain", chains_equivalent(el.triples, c.triples),
          to_json(c).dump(), to_json(el).dump());

    note("family 1: symbolic completion quartic");
    const SymbolicQuartic sq = family1_quartic_symbolic();
    const MPoly p4 = sq.numerator.coefficient("p", 4).coefficient("q", 0);
    const MPoly q4 = sq.numerator.coefficient("q", 4).coefficient("p", 0);
    for (const auto& [entry, got] : {std::pair{std::string("family1_quartic_p4_coefficient"), p4},
                                     std::pair{std::string("family1_quartic_q4_coefficient"), q4}}) {
      const MPoly want_poly = ev.squared_expression(entry);
      check(r, g, ev.tag(entry), want_poly == got,
            "(" + ev.entry(entry).at("square_of").get<std::string>() + ")^2",
            want_poly == got ? "equal as polynomials in m, n" : "differs by " + (got - want_poly).str());
    }
  }

  QuarticCurve data_quartic() const {
    const auto c = ev.rats("condition_quartic", "coefficients");
    if (c.size() != 5) throw FormatError("condition_quartic needs five coefficients");
    return QuarticCurve(c[0], c[1], c[2], c[3], c[4]);
  }

  void family2() {
    const std::string g = "family 2";
    const QuarticCurve f = data_quartic();
    const ConditionQuartic cq = family2_condition_quartic(3, 4);
    check(r, g, ev.tag("condition_quartic") + " (up to a square factor)",
          !cq.degenerate && square_class_equivalent(cq.quartic, f.to_poly()), f.str(),
          cq.degenerate ? cq.reason : cq.quartic.str());

    const auto ms = ev.rats("quartic_square_values");
    std::vector<BigRat> bad;
    for (const auto& m : ms)
      if (!is_rational_square(f.eval(m))) bad.push_back(m);
    check(r, g, ev.tag("quartic_square_values"), bad.empty(), "all squares", bad.empty() ? "all squares" : "not square at " + join(bad));

    for (const std::string name : {"chain_family2_first", "chain_family2_second"}) {
      const Json& prm = ev.entry(name).at("params");
      const ChainSolution c =
          family2_chain(rat_from_json(prm.at("p")), rat_from_json(prm.at("r")), rat_from_json(prm.at("m")));
      const auto want = ev.triples(name);
      check(r, g, ev.tag(name), !c.trivial && chains_equivalent(c.triples, want), to_json(verify_chain(want)).dump(),
            to_json(c).dump());
    }

    std::vector<BigRat> not_flagged;
    for (const auto& m : ev.rats("family2_trivial_values")) {
      bool flagged = false;
      try {
        flagged = family2_chain(3, 4, m).trivial;
      } catch (const DegenerateInput&) {
        flagged = false;
      }
      if (!flagged) not_flagged.push_back(m);
    }
    check(r, g, ev.tag("family2_trivial_values") + ": flagged trivial", not_flagged.empty(), "all flagged",
          not_flagged.empty() ? "all flagged" : "not flagged: " + join(not_flagged));
  }

  ChainSolution data_chain(const std::string& name) const { return verify_chain(ev.triples(name)); }

  void curves() {
    const std::string g = "curves";
    const auto k1 = curve_from_chain(data_chain("chain_family1_m1_n2")).k();
    const auto k2 = curve_from_chain(data_chain("chain_family2_first")).k();
    check_equal(r, g, ev.tag("k_curve1"), ev.rat("k_curve1", "k").str(), k1.str());
    check_equal(r, g, ev.tag("k_curve2"), ev.rat("k_curve2", "k").str(), k2.str());
  }

  void points() {
    const std::string g = "points";
    const MordellCurve e1(ev.rat("k_curve1", "k")), e2(ev.rat("k_curve2", "k"));
    const auto p1 = ev.points("points_curve1");
    const auto p2 = ev.points("points_curve2");
    auto count_on = [](const MordellCurve& e, const std::vector<CurvePoint>& ps) {
      return std::to_string(std::count_if(ps.begin(), ps.end(), [&](const CurvePoint& p) { return on_curve(e, p); }));
    };
    check_equal(r, g, ev.tag("points_curve1") + ": on the curve", std::to_string(p1.size()), count_on(e1, p1));
    const ChainSolution c1 = data_chain("chain_family1_m1_n2");
    const auto img1 = points_from_chain(c1, curve_from_chain(c1)).points;
    check(r, g, ev.tag("points_curve1") + ": deduplicated image of the chain, same order", img1 == p1,
          join_points(p1), join_points(img1));

    check_equal(r, g, ev.tag("points_curve2") + ": on the curve", std::to_string(p2.size()), count_on(e2, p2));
    // P1..P9 come from the chain scaled by -1 (the y -> -y images)
    const ChainSolution c2 = verify_chain(scaled(data_chain("chain_family2_first").triples, BigRat(-1)));
    const auto img2 = points_from_chain(c2, curve_from_chain(c2)).points;
    check(r, g, ev.tag("points_curve2") + ": image of the first family-2 chain (scaled by -1)",
          same_point_set(img2, p2), join_points(p2), join_points(img2));
  }

  void regulators() {
    const std::string g = "regulators";
    const MordellCurve e1(ev.rat("k_curve1", "k")), e2(ev.rat("k_curve2", "k"));
    const auto p1 = ev.points("points_curve1");
    const auto p2 = ev.points("points_curve2");
    const long wp = o.precision;

    const std::string r1n = "regulator_curve1", r2n = "regulator_curve2";
    const BigReal want1 = BigReal::parse(ev.entry(r1n).at("value").get<std::string>(), wp);
    const BigReal tol1 = BigReal::parse(ev.entry(r1n).at("tolerance").get<std::string>(), wp);
    const BigReal want2 = BigReal::parse(ev.entry(r2n).at("value").get<std::string>(), wp);
    const BigReal tol2 = BigReal::parse(ev.entry(r2n).at("tolerance").get<std::string>(), wp);

    note("regulators: calibrating the height normalization");
    const auto norm = calibrate_normalization(e1, pick(p1, ev.subset(r1n)), want1, tol1, wp);
    check(r, g, "height normalization reproducing the first regulator", norm.has_value(), "x-limit or half",
          norm ? to_string(*norm) : "neither");
    const HeightNormalization hn = norm.value_or(HeightNormalization::kLimitX);
    r.results["normalization"] = to_string(hn);

    note("regulators: first curve");
    const HeightCalculator h1(e1, wp, hn);
    const RegulatorReport reg1 = regulator(h1, pick(p1, ev.subset(r1n)));
    r.add_check({ev.tag(r1n), g, abs(reg1.determinant - want1) <= tol1, ev.entry(r1n).at("value").get<std::string>(),
                 real_string(reg1.determinant, 64), "+-" + ev.entry(r1n).at("tolerance").get<std::string>()});
    const RegulatorReport ind1 = independence_report(h1, p1);
    check_equal(r, g, ev.tag("independent_curve1"), std::to_string(ev.integer("independent_curve1", "size")),
                std::to_string(ind1.witness_subset.size()));

    note("regulators: second curve");
    const HeightCalculator h2(e2, wp, hn);
    const RegulatorReport reg2 = regulator(h2, pick(p2, ev.subset(r2n)));
    r.add_check({ev.tag(r2n), g, abs(reg2.determinant - want2) <= tol2, ev.entry(r2n).at("value").get<std::string>(),
                 real_string(reg2.determinant, 64), "+-" + ev.entry(r2n).at("tolerance").get<std::string>()});
    const RegulatorReport ind2 = independence_report(h2, p2);
    check_equal(r, g, ev.tag("independent_curve2"), std::to_string(ev.integer("independent_curve2", "size")),
                std::to_string(ind2.witness_subset.size()));

    r.results["regulator_curve1"] = to_json(reg1);
    r.results["regulator_curve2"] = to_json(reg2);
  }

  void sieve() {
    const std::string g = "quartic search";
    const QuarticCurve f = data_quartic();
    for (const std::string name : {"sieve_height_600", "sieve_height_16000"}) {
      const long H = ev.integer(name, "height");
      note("sieve: height " + std::to_string(H));
      SieveOptions so;
      so.shards = std::max(1u, o.shards);
      std::vector<BigRat> pos;
      for (const auto& p : search_square_values(f, H, so))
        if (p.m > 0) pos.push_back(p.m);
      check_equal(r, g, ev.tag(name), join(ev.rats(name)), join(pos));
    }
  }

  void third_curve() {
    const std::string g = "third curve";
    const ChainSolution c3 = data_chain("chain_family2_second");
    const MordellCurve e3 = curve_from_chain(c3);
    r.results["k_curve3_computed"] = e3.k().str();
    check_equal(r, g, ev.tag("k_curve3"), ev.rat("k_curve3", "k").str(), e3.k().str(), false);
    const auto pts = points_from_chain(c3, e3).points;
    check_equal(r, g, "9 points of the second family-2 chain on its curve", "9",
                std::to_string(std::count_if(pts.begin(), pts.end(), [&](const CurvePoint& p) { return on_curve(e3, p); })),
                false);
    if (!o.full) return;

    note("third curve: factoring within the default budget");
    const Factorization fd = factor(e3.k().num());
    const std::string outcome =
        fd.complete ? "complete" : "budget exceeded, unfactored cofactor " + fd.cofactor.get_str();
    r.results["third_curve_default_budget"] = outcome;
    check(r, g, "factoring the constant within the default budget (outcome reported)", true,
          "complete, or budget exceeded with the cofactor named", outcome, false);

    note("third curve: independence with the extended budget");
    std::string size = "not computed";
    bool ok = false;
    try {
      const HeightCalculator h3(e3, o.precision, HeightNormalization::kLimitX, o.third_curve_budget);
      size = std::to_string(independence_report(h3, pts).witness_subset.size());
      ok = size == std::to_string(ev.integer("independent_curve3", "size"));
    } catch (const FactorizationIncomplete& e) {
      size = std::string("budget exceeded: ") + e.what();
    }
    check(r, g, ev.tag("independent_curve3"), ok, std::to_string(ev.integer("independent_curve3", "size")), size,
          false);
  }
};

}  // namespace

RunReport cmd_reproduce(const ReproduceOptions& o) {
  RunReport r;
  r.command = "reproduce";
  r.inputs = Json{{"level", o.full ? "full" : "quick"}, {"precision", o.precision}};
  guarded(r, [&] {
    const ExpectedValues ev = ExpectedValues::load(o.expected_file);
    r.inputs["expected_version"] = ev.version();
    Reproducer rp{o, ev, r};
    rp.note("identities");
    rp.identities();
    rp.note("family 1");
    rp.family1();
    rp.note("family 2");
    rp.family2();
    rp.curves();
    rp.points();
    if (o.full) {
      rp.regulators();
      rp.sieve();
    }
    rp.third_curve();
    std::size_t mandatory = 0, passed = 0, optional_failed = 0;
    for (const auto& c : r.checks) {
      if (c.mandatory) {
        ++mandatory;
        passed += c.pass ? 1 : 0;
      } else if (!c.pass) {
        ++optional_failed;
      }
    }
    r.results["mandatory_checks"] = mandatory;
    r.results["mandatory_passed"] = passed;
    r.results["optional_failed"] = optional_failed;
  });
  return r;
}

// ---- argument parsing ---------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sextic chains, Mordell curves and their regulators", "sextic"};
  app.require_subcommand(1);
  app.fallthrough();  // --pretty may follow the subcommand
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  auto* vi = app.add_subcommand("verify-identities", "exact checks of the core identities and the birational maps");
  bool skip_maps = false, corrupt_phi = false;
  vi->add_flag("--skip-maps", skip_maps, "identities only");
  vi->add_flag("--corrupt-phi", corrupt_phi, "negative control: change one coefficient of phi");

  auto* gc = app.add_subcommand("gen-chain", "evaluate a parametric family; family 1: m n, family 2: p r m");
  int family = 0;
  std::vector<std::string> params;
  gc->add_option("--family", family, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  gc->add_option("params", params, "rational parameters")->required();

  auto* cp = app.add_subcommand("chain-points", "Mordell curve and rational points of a chain file");
  std::string chain_file;
  cp->add_option("chain", chain_file, "chain JSON")->required();

  auto* rg = app.add_subcommand("regulator", "Gram matrix, regulator and independence of points");
  RegulatorOptions ro;
  std::string norm = "x-limit";
  long prec = -1;
  rg->add_option("--curve", ro.curve_file, "curve JSON {\"k\": ...}")->required();
  rg->add_option("--points", ro.points_file, "points JSON list")->required();
  rg->add_option("--precision", prec, "working precision in bits (default $SEXTIC_PRECISION or 256)");
  rg->add_option("--subset", ro.subset, "1-based point indices, comma separated")->delimiter(',');
  rg->add_option("--normalization", norm, "x-limit (calibrated default) or half")
      ->check(CLI::IsMember({"x-limit", "half"}));
  rg->add_option("--ecm-curves", ro.budget.ecm_curves, "factoring budget: ECM curves");
  rg->add_option("--ecm-b1", ro.budget.ecm_b1, "factoring budget: ECM stage-1 bound");

  auto* sq = app.add_subcommand("search-quartic", "rational m of bounded height with f(m) a square");
  SearchOptions so;
  bool progress = false;
  sq->add_option("--coeffs", so.coefficients, "a4,a3,a2,a1,a0")->required();
  sq->add_option("--height", so.height, "height bound")->required();
  sq->add_option("--shards", so.shards, "worker threads")->check(CLI::Range(1u, 256u));
  sq->add_flag("--progress", progress, "progress lines on stderr");

  auto* rp = app.add_subcommand("reproduce", "check every published value");
  ReproduceOptions rpo;
  std::string level = "quick";
  rp->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  rp->add_option("--expected", rpo.expected_file, "expected-value table (default: the shipped one)");
  rp->add_option("--precision", prec, "working precision in bits (default $SEXTIC_PRECISION or 256)");
  rp->add_option("--shards", rpo.shards, "sieve worker threads")->check(CLI::Range(1u, 256u));
  rp->add_flag("--progress", progress, "progress lines on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sextic: " << e.what() << "\n";
    return kCheckFailed;
  }

  auto progress_fn = [&](const std::string& s) { err << s << "\n" << std::flush; };
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (vi->parsed()) {
      r = cmd_verify_identities(skip_maps, corrupt_phi);
    } else if (gc->parsed()) {
      r = cmd_gen_chain(family, params);
    } else if (cp->parsed()) {
      r = cmd_chain_points(chain_file);
    } else if (rg->parsed()) {
      ro.precision = prec > 0 ? prec : default_precision();
      ro.normalization = parse_normalization(norm);
      r = cmd_regulator(ro);
    } else if (sq->parsed()) {
      if (progress) so.progress = progress_fn;
      r = cmd_search_quartic(so);
    } else {
      rpo.full = level == "full";
      rpo.precision = prec > 0 ? prec : default_precision();
      if (progress) rpo.progress = progress_fn;
      r = cmd_reproduce(rpo);
    }
  } catch (const std::exception& e) {
    err << "sextic: " << e.what() << "\n";
    return kCheckFailed;
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (pretty) {
    out << r.pretty();
  } else {
    out << r.to_json().dump(2) << "\n";
  }
  std::ostringstream el;
  el << std::fixed << std::setprecision(3) << r.elapsed_seconds;
  err << "elapsed: " << el.str() << " s\n";
  return r.exit_code;
}

}  // namespace sextic::cli
