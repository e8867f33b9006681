#include "sextic/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

std::uint64_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

long index_of(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it == vars.end() || *it != v) return -1;
  return it - vars.begin();
}

void add_term(MPoly::TermMap& terms, const Exponents& e, const BigRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

bool GrLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MPoly::MPoly(long c) : MPoly(BigRat(c)) {}

MPoly::MPoly(const BigRat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly::MPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

MPoly MPoly::var(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  TermMap t;
  t.emplace(Exponents{1}, BigRat(1));
  return MPoly({name}, std::move(t));
}

MPoly MPoly::from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponents, BigRat>>& terms) {
  // sort the variables and permute exponents to match
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return vars[i] < vars[j]; });
  std::vector<std::string> sorted;
  for (auto i : order) sorted.push_back(vars[i]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate variable name");

  TermMap t;
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent vector does not match variable count");
    Exponents se(e.size());
    for (std::size_t k = 0; k < order.size(); ++k) se[k] = e[order[k]];
    add_term(t, se, c);
  }
  return MPoly(std::move(sorted), std::move(t));
}

void MPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(kept.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    t.emplace(std::move(ne), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(t);
}

MPoly MPoly::aligned_to(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<long> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = index_of(vars, vars_[i]);
  MPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(where[i])] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

BigRat MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + str());
  return terms_.empty() ? BigRat(0) : terms_.begin()->second;
}

bool MPoly::depends_on(const std::string& v) const { return index_of(vars_, v) >= 0; }

unsigned MPoly::degree_in(const std::string& v) const {
  const long i = index_of(vars_, v);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

unsigned MPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return static_cast<unsigned>(d);
}

MPoly MPoly::coefficient(const std::string& v, unsigned d) const {
  const long i = index_of(vars_, v);
  if (i < 0) return d == 0 ? *this : MPoly();
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(i)] != d) continue;
    Exponents ne = e;
    ne[static_cast<std::size_t>(i)] = 0;
    out.terms_.emplace(std::move(ne), c);
  }
  out.normalize();
  return out;
}

BigRat MPoly::coefficient_of(const std::map<std::string, unsigned>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : monomial) {
    if (k == 0) continue;
    const long i = index_of(vars_, name);
    if (i < 0) return 0;
    e[static_cast<std::size_t>(i)] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRat(0) : it->second;
}

MPoly MPoly::sum(const std::vector<MPoly>& parts) {
  std::vector<std::string> vars;
  for (const auto& q : parts) vars = merge_vars(vars, q.vars_);
  TermMap t;
  for (const auto& q : parts) {
    const MPoly a = q.aligned_to(vars);
    for (const auto& [e, c] : a.terms_) add_term(t, e, c);
  }
  return MPoly(std::move(vars), std::move(t));
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  const auto vars = merge_vars(vars_, o.vars_);
  if (vars != vars_) *this = aligned_to(vars);
  const MPoly& b = o.vars_ == vars ? o : o.aligned_to(vars);
  for (const auto& [e, c] : b.terms_) add_term(terms_, e, c);
  normalize();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  const auto vars = merge_vars(a.vars_, b.vars_);
  const MPoly x = a.aligned_to(vars);
  const MPoly y = b.aligned_to(vars);
  MPoly::TermMap t;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(t, e, ca * cb);
    }
  }
  return MPoly(vars, std::move(t));
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRat mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    const bool monomial_is_one = degree_of(e) == 0;
    bool need_star = false;
    if (monomial_is_one || mag != BigRat(1)) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = 1;
  MPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigRat poly_eval(const MPoly& p, const Assignment& point) {
  const auto& vars = p.variables();
  std::vector<std::vector<BigRat>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw std::invalid_argument("no value for variable " + vars[i]);
    powers[i] = {BigRat(1), it->second};
    const unsigned d = p.degree_in(vars[i]);
    for (unsigned k = 2; k <= d; ++k) powers[i].push_back(powers[i].back() * it->second);
  }
  BigRat sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigRat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= powers[i][e[i]];
    sum += t;
  }
  return sum;
}

MPoly poly_substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings) {
  const auto& vars = p.variables();
  std::vector<std::vector<MPoly>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    const MPoly base = it == bindings.end() ? MPoly::var(vars[i]) : it->second;
    powers[i] = {MPoly(1), base};
    const unsigned d = p.degree_in(vars[i]);
    for (unsigned k = 2; k <= d; ++k) powers[i].push_back(powers[i].back() * base);
  }
  std::vector<MPoly> parts;
  parts.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    MPoly t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= powers[i][e[i]];
    parts.push_back(std::move(t));
  }
  return MPoly::sum(parts);
}

bool poly_equal(const MPoly& p, const MPoly& q) { return p == q; }

MPoly swap_variables(const MPoly& p, const std::string& a, const std::string& b) {
  std::vector<std::string> renamed = p.variables();
  for (auto& v : renamed) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  std::vector<std::pair<Exponents, BigRat>> terms(p.terms().begin(), p.terms().end());
  return MPoly::from_terms(std::move(renamed), terms);
}

MPoly symmetric_reduce(const MPoly& p, const std::string& x, const std::string& y, const std::string& e1,
                       const std::string& e2) {
  if (p.depends_on(e1) || p.depends_on(e2))
    throw std::invalid_argument("symmetric_reduce: target names already occur in the polynomial");
  if (swap_variables(p, x, y) != p)
    throw std::invalid_argument("symmetric_reduce: polynomial is not symmetric in " + x + ", " + y);

  const MPoly vx = MPoly::var(x);
  const MPoly vy = MPoly::var(y);
  const MPoly sum = vx + vy;
  const MPoly prod = vx * vy;
  const MPoly ve1 = MPoly::var(e1);
  const MPoly ve2 = MPoly::var(e2);

  MPoly rest = p;
  MPoly result;
  while (!rest.is_zero()) {
    // Leading (deg_x, deg_y) pair, lexicographically.
    std::pair<unsigned, unsigned> lead{0, 0};
    const auto& vars = rest.variables();
    const long ix = index_of(vars, x);
    const long iy = index_of(vars, y);
    for (const auto& [e, c] : rest.terms()) {
      const unsigned a = ix >= 0 ? e[static_cast<std::size_t>(ix)] : 0;
      const unsigned b = iy >= 0 ? e[static_cast<std::size_t>(iy)] : 0;
      lead = std::max(lead, std::pair{a, b});
    }
    const auto [a, b] = lead;
    if (a < b) throw InternalError("symmetric_reduce: leading exponent pair not dominant");

    // Collect the cofactor (in the other variables) of x^a y^b.
    MPoly cofactor = rest.coefficient(x, a).coefficient(y, b);
    result += cofactor * pow(ve1, a - b) * pow(ve2, b);
    rest -= cofactor * pow(sum, a - b) * pow(prod, b);
  }
  return result;
}

MPoly reduce_mod_square(const MPoly& p, const std::string& y, const MPoly& g) {
  if (g.depends_on(y)) throw std::invalid_argument("reduce_mod_square: relation right-hand side involves " + y);
  const unsigned d = p.degree_in(y);
  std::vector<MPoly> gpow{MPoly(1)};
  for (unsigned k = 1; k <= d / 2; ++k) gpow.push_back(gpow.back() * g);
  const MPoly vy = MPoly::var(y);
  std::vector<MPoly> parts;
  for (unsigned k = 0; k <= d; ++k) {
    MPoly c = p.coefficient(y, k);
    if (c.is_zero()) continue;
    MPoly t = c * gpow[k / 2];
    if (k % 2 == 1) t *= vy;
    parts.push_back(std::move(t));
  }
  return MPoly::sum(parts);
}

RationalFunction::RationalFunction(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("division by zero");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den, a.den * b.num};
}

RationalFunction substitute_fractions(const MPoly& p, const std::map<std::string, RationalFunction>& bindings) {
  const auto& vars = p.variables();
  struct Slot {
    std::vector<MPoly> num_pow;
    std::vector<MPoly> den_pow;
    unsigned degree = 0;
    bool bound = false;
  };
  std::vector<Slot> slots(vars.size());
  MPoly den = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    Slot& s = slots[i];
    s.degree = p.degree_in(vars[i]);
    const RationalFunction f = it == bindings.end() ? RationalFunction(MPoly::var(vars[i])) : it->second;
    s.bound = it != bindings.end();
    s.num_pow = {MPoly(1)};
    s.den_pow = {MPoly(1)};
    for (unsigned k = 1; k <= s.degree; ++k) {
      s.num_pow.push_back(s.num_pow.back() * f.num);
      s.den_pow.push_back(s.bound ? s.den_pow.back() * f.den : MPoly(1));
    }
    den *= s.den_pow[s.degree];
  }
  std::vector<MPoly> parts;
  parts.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    MPoly t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Slot& s = slots[i];
      t *= s.num_pow[e[i]];
      if (s.bound && s.degree > e[i]) t *= s.den_pow[s.degree - e[i]];
    }
    parts.push_back(std::move(t));
  }
  return {MPoly::sum(parts), den};
}

}  // namespace sextic
