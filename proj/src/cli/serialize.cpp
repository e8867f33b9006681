#include "sextic/cli/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sextic/errors.hpp"

namespace sextic::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const BigRat& q) { return q.str(); }

BigRat rat_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return BigRat::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw FormatError("not a rational: \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_integer()) return BigRat(BigInt(std::to_string(j.get<long long>())));
  throw FormatError("expected a rational as a string, got " + j.dump());
}

Json to_json(const ChainSolution& c) {
  Json rows = Json::array();
  for (const auto& t : c.triples) rows.push_back(Json::array({to_json(t.x), to_json(t.y), to_json(t.z)}));
  return Json{{"triples", rows}, {"phi", to_json(c.phi_value)}};
}

std::vector<Triple> triples_from_json(const Json& j) {
  const Json& rows = field(j, "triples");
  if (!rows.is_array()) throw FormatError("\"triples\" must be a list");
  std::vector<Triple> out;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != 3) throw FormatError("each triple must be a list of three rationals");
    out.push_back({rat_from_json(r[0]), rat_from_json(r[1]), rat_from_json(r[2])});
  }
  if (j.contains("phi") && !out.empty()) {
    const BigRat want = rat_from_json(j.at("phi"));
    for (std::size_t i = 0; i < out.size(); ++i)
      if (phi(out[i]) != want) throw ChainMismatch(i + 1, want.str(), phi(out[i]).str());
  }
  return out;
}

Json curve_to_json(const MordellCurve& e) { return Json{{"k", to_json(e.k())}}; }

MordellCurve curve_from_json(const Json& j) { return MordellCurve(rat_from_json(field(j, "k"))); }

Json to_json(const CurvePoint& p) {
  if (p.infinity) return Json{{"infinity", true}};
  return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

CurvePoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("infinity") && j.at("infinity") == true) return CurvePoint::at_infinity();
  return CurvePoint::affine(rat_from_json(field(j, "x")), rat_from_json(field(j, "y")));
}

std::vector<CurvePoint> points_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : field(j, "points");
  if (!list.is_array()) throw FormatError("\"points\" must be a list");
  std::vector<CurvePoint> out;
  for (const auto& p : list) out.push_back(point_from_json(p));
  return out;
}

Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"exponents", it->first}, {"coefficient", to_json(it->second)}});
  return Json{{"variables", p.variables()}, {"terms", terms}};
}

MPoly poly_from_json(const Json& j) {
  const auto vars = field(j, "variables").get<std::vector<std::string>>();
  std::vector<std::pair<Exponents, BigRat>> terms;
  for (const auto& t : field(j, "terms")) {
    auto e = field(t, "exponents").get<Exponents>();
    if (e.size() != vars.size()) throw FormatError("exponent vector length differs from the variable list");
    terms.emplace_back(std::move(e), rat_from_json(field(t, "coefficient")));
  }
  return MPoly::from_terms(vars, terms);
}

Json to_json(const SquareValuePoint& p) { return Json{{"m", to_json(p.m)}, {"y", to_json(p.y)}}; }

int decimal_digits(long bits) { return static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))); }

std::string real_string(const BigReal& x, long bits) {
  const int sig = decimal_digits(bits);
  int int_digits = 0;
  const double d = std::fabs(x.to_double());
  if (d >= 1) int_digits = static_cast<int>(std::floor(std::log10(d))) + 1;
  return x.fixed(std::max(0, sig - int_digits));
}

Json to_json(const RegulatorReport& r) {
  const long bits = r.precision;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  Json hs = Json::array();
  for (const auto& h : r.heights) hs.push_back(real_string(h, bits));
  Json gram = Json::array();
  for (const auto& row : r.gram) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(real_string(v, bits));
    gram.push_back(jr);
  }
  Json witness = Json::array();  // 1-based, like --subset
  for (std::size_t i : r.witness_subset) witness.push_back(i + 1);
  Json eig = Json::array();
  for (double v : r.eigenvalues) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    eig.push_back(os.str());
  }
  return Json{{"points", pts},
              {"normalization", to_string(r.normalization)},
              {"precision_bits", bits},
              {"heights", hs},
              {"gram", gram},
              {"regulator", real_string(r.determinant, bits)},
              {"error_bound", r.error_bound.sci(6)},
              {"eigenvalues", eig},
              {"independent", r.independent},
              {"witness_subset", witness}};
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace sextic::cli
