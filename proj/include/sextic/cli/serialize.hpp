#pragma once

// JSON encodings shared by the CLI commands. Rationals are decimal strings
// "num/den" ("num" when den = 1); reals are decimal strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "sextic/chains.hpp"
#include "sextic/mordell.hpp"
#include "sextic/polynomial.hpp"
#include "sextic/quartic.hpp"
#include "sextic/regulator.hpp"

namespace sextic::cli {

using Json = nlohmann::ordered_json;

/// Thrown for malformed JSON documents or fields.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const BigRat& q);
BigRat rat_from_json(const Json& j);

/// {"triples": [[x, y, z], ...], "phi": "..."}
Json to_json(const ChainSolution& c);
/// Reads the triples; "phi" is optional and, when present, must match.
std::vector<Triple> triples_from_json(const Json& j);

/// {"k": "..."}
Json curve_to_json(const MordellCurve& e);
MordellCurve curve_from_json(const Json& j);

/// {"x": "...", "y": "..."} or {"infinity": true}
Json to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);
/// A bare list of points, or an object with a "points" list.
std::vector<CurvePoint> points_from_json(const Json& j);

/// {"variables": [...], "terms": [{"exponents": [...], "coefficient": "..."}]}
Json to_json(const MPoly& p);
MPoly poly_from_json(const Json& j);

Json to_json(const SquareValuePoint& p);

/// Decimal digits shown for a real computed with `bits` of precision.
int decimal_digits(long bits);
std::string real_string(const BigReal& x, long bits);

/// Gram matrix and heights as decimal strings at the working precision,
/// plus the normalization tag.
Json to_json(const RegulatorReport& r);

Json parse_json_file(const std::string& path);

}  // namespace sextic::cli
