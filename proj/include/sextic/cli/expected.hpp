#pragma once

// The table of published values (data/expected_values.json).

#include <string>
#include <vector>

#include "sextic/cli/serialize.hpp"

namespace sextic::cli {

class ExpectedValues {
 public:
  /// Empty path: the table shipped in the source tree.
  static ExpectedValues load(const std::string& path = "");
  static std::string default_path();

  const std::string& path() const { return path_; }
  int version() const;

  const Json& entry(const std::string& name) const;
  std::string tag(const std::string& name) const;

  std::vector<Triple> triples(const std::string& name) const;
  BigRat rat(const std::string& name, const std::string& key) const;
  std::vector<BigRat> rats(const std::string& name, const std::string& key = "values") const;
  std::vector<CurvePoint> points(const std::string& name) const;
  /// 1-based indices.
  std::vector<std::size_t> subset(const std::string& name) const;
  long integer(const std::string& name, const std::string& key) const;
  /// The "square_of" expression of an entry, squared.
  MPoly squared_expression(const std::string& name) const;

 private:
  std::string path_;
  Json doc_;
};

/// Polynomial from an expression over integers and variable names with
/// + - * ^ and parentheses, e.g. "(m-2*n)^2+1".
MPoly parse_poly_expr(const std::string& text);

}  // namespace sextic::cli
