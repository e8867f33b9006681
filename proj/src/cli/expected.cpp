#include "sextic/cli/expected.hpp"

#include <cctype>

#ifndef SEXTIC_DATA_DIR
#define SEXTIC_DATA_DIR "data"
#endif

namespace sextic::cli {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  MPoly parse() {
    MPoly p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("expression \"" + s_ + "\" at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MPoly sum() {
    MPoly acc;
    if (eat('-')) {
      acc = -product();
    } else {
      eat('+');
      acc = product();
    }
    for (;;) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else return acc;
    }
  }
  MPoly product() {
    MPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  MPoly power() {
    MPoly b = atom();
    if (!eat('^')) return b;
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("exponent must be a non-negative integer");
    return pow(b, static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
  }
  MPoly atom() {
    if (eat('(')) {
      MPoly p = sum();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MPoly(BigRat(parse_int(s_.substr(start, i_ - start))));
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail("expected a number, a variable or '('");
    return MPoly::var(s_.substr(start, i_ - start));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

MPoly parse_poly_expr(const std::string& text) { return ExprParser(text).parse(); }

std::string ExpectedValues::default_path() { return std::string(SEXTIC_DATA_DIR) + "/expected_values.json"; }

ExpectedValues ExpectedValues::load(const std::string& path) {
  ExpectedValues v;
  v.path_ = path.empty() ? default_path() : path;
  v.doc_ = parse_json_file(v.path_);
  if (!v.doc_.is_object() || !v.doc_.contains("entries") || !v.doc_.at("entries").is_object())
    throw FormatError(v.path_ + ": no \"entries\" object");
  return v;
}

int ExpectedValues::version() const { return doc_.value("version", 0); }

const Json& ExpectedValues::entry(const std::string& name) const {
  const Json& e = doc_.at("entries");
  if (!e.contains(name)) throw FormatError(path_ + ": missing entry \"" + name + "\"");
  return e.at(name);
}

std::string ExpectedValues::tag(const std::string& name) const { return entry(name).value("tag", name); }

namespace {

const Json& key_of(const Json& e, const std::string& name, const std::string& key) {
  if (!e.contains(key)) throw FormatError("entry \"" + name + "\" has no \"" + key + "\"");
  return e.at(key);
}

}  // namespace

std::vector<Triple> ExpectedValues::triples(const std::string& name) const { return triples_from_json(entry(name)); }

BigRat ExpectedValues::rat(const std::string& name, const std::string& key) const {
  return rat_from_json(key_of(entry(name), name, key));
}

std::vector<BigRat> ExpectedValues::rats(const std::string& name, const std::string& key) const {
  std::vector<BigRat> out;
  for (const auto& v : key_of(entry(name), name, key)) out.push_back(rat_from_json(v));
  return out;
}

std::vector<CurvePoint> ExpectedValues::points(const std::string& name) const {
  return points_from_json(entry(name));
}

std::vector<std::size_t> ExpectedValues::subset(const std::string& name) const {
  return key_of(entry(name), name, "subset").get<std::vector<std::size_t>>();
}

long ExpectedValues::integer(const std::string& name, const std::string& key) const {
  const Json& v = key_of(entry(name), name, key);
  if (!v.is_number_integer()) throw FormatError("entry \"" + name + "\": \"" + key + "\" must be an integer");
  return v.get<long>();
}

MPoly ExpectedValues::squared_expression(const std::string& name) const {
  const MPoly p = parse_poly_expr(key_of(entry(name), name, "square_of").get<std::string>());
  return p * p;
}

}  // namespace sextic::cli
