#include "sextic/quartic.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

constexpr int kSievePrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Integer form G(a, b) = d^2 b^4 f(a/b).
struct IntegerForm {
  std::array<BigInt, 5> A;  // ascending in a
  BigInt d;

  BigInt eval(long a, long b) const {
    const BigInt ai = a, bi = b;
    BigInt acc = A[4];
    BigInt bp = 1;
    for (int i = 3; i >= 0; --i) {
      bp *= bi;
      acc = acc * ai + A[i] * bp;
    }
    return acc;
  }
};

IntegerForm integer_form(const QuarticCurve& f) {
  IntegerForm g;
  g.d = 1;
  for (unsigned i = 0; i < 5; ++i) g.d = lcm(g.d, f.coeff(i).den());
  for (unsigned i = 0; i < 5; ++i) g.A[i] = (f.coeff(i) * BigRat(BigInt(g.d * g.d))).num();
  return g;
}

// Per prime p: word(bclass, s) has bit j set when G(s + j, bclass) is a square mod p.
struct ResidueTable {
  int p;
  std::vector<std::uint64_t> words;  // p * p entries

  const std::uint64_t* row(long b) const { return words.data() + static_cast<std::size_t>(b % p) * p; }
};

ResidueTable build_table(const IntegerForm& g, int p) {
  std::vector<char> qr(p, 0);
  for (int r = 0; r < p; ++r) qr[(r * r) % p] = 1;
  std::array<long, 5> A{};
  for (int i = 0; i < 5; ++i) A[i] = static_cast<long>(mpz_fdiv_ui(g.A[i].get_mpz_t(), p));

  ResidueTable t{p, std::vector<std::uint64_t>(static_cast<std::size_t>(p) * p)};
  std::vector<char> ok(p);
  for (int bc = 0; bc < p; ++bc) {
    for (int a = 0; a < p; ++a) {
      long v = 0, ap = 1, bp = 1;
      std::array<long, 5> apow{}, bpow{};
      for (int i = 0; i < 5; ++i) {
        apow[i] = ap;
        bpow[i] = bp;
        ap = ap * a % p;
        bp = bp * bc % p;
      }
      for (int i = 0; i < 5; ++i) v = (v + A[i] * apow[i] % p * bpow[4 - i]) % p;
      ok[a] = qr[v];
    }
    for (int s = 0; s < p; ++s) {
      std::uint64_t w = 0;
      for (int j = 0; j < 64; ++j)
        if (ok[(s + j) % p]) w |= std::uint64_t{1} << j;
      t.words[static_cast<std::size_t>(bc) * p + s] = w;
    }
  }
  return t;
}

long mod(long a, long p) {
  const long r = a % p;
  return r < 0 ? r + p : r;
}

std::optional<SquareValuePoint> confirm(const IntegerForm& g, long a, long b) {
  const BigInt v = g.eval(a, b);
  if (v < 0) return std::nullopt;
  const auto s = int_sqrt_exact(v);
  if (!s) return std::nullopt;
  const BigInt bi = b;
  return SquareValuePoint{BigRat(BigInt(a), bi), BigRat(*s, g.d * bi * bi)};
}

void sieve_range(const IntegerForm& g, const std::vector<ResidueTable>& tables, long H, long alo, long ahi,
                 std::vector<SquareValuePoint>& out, const std::function<void(long)>& tick) {
  const long len = ahi - alo + 1;
  if (len <= 0) return;
  const long nwords = (len + 63) / 64;
  const std::size_t np = tables.size();
  std::vector<const std::uint64_t*> rows(np);
  std::vector<long> off(np), step(np);
  for (std::size_t k = 0; k < np; ++k) step[k] = 64 % tables[k].p;
  const std::uint64_t tail = (len % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (len % 64)) - 1);

  for (long b = 1; b <= H; ++b) {
    for (std::size_t k = 0; k < np; ++k) {
      rows[k] = tables[k].row(b);
      off[k] = mod(alo, tables[k].p);
    }
    for (long w = 0; w < nwords; ++w) {
      std::uint64_t mask = (w == nwords - 1) ? tail : ~std::uint64_t{0};
      for (std::size_t k = 0; k < np; ++k) {
        mask &= rows[k][off[k]];
        off[k] += step[k];
        if (off[k] >= tables[k].p) off[k] -= tables[k].p;
      }
      while (mask) {
        const int j = __builtin_ctzll(mask);
        mask &= mask - 1;
        const long a = alo + 64 * w + j;
        if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
        if (auto pt = confirm(g, a, b)) out.push_back(std::move(*pt));
      }
    }
    if (tick) tick(b);
  }
}

void sort_points(std::vector<SquareValuePoint>& pts) {
  auto key = [](const SquareValuePoint& p) {
    const BigInt a = p.m.num(), b = p.m.den();
    const BigInt h = std::max(BigInt(abs(a)), b);
    return std::tuple{h, a, b};
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

void check_point(const QuarticCurve& f, const SquareValuePoint& pt, const char* where) {
  if (pt.y < BigRat(0) || pt.y * pt.y != f.eval(pt.m))
    throw InternalError(std::string(where) + ": y^2 != f(m) at m = " + pt.m.str());
}

// ---- published quartic model and maps -----------------------------------------

MPoly lit(const char* s) { return MPoly(BigRat::parse(s)); }

const MPoly& mv() {
  static const MPoly v = MPoly::var("m");
  return v;
}
const MPoly& Yv() {
  static const MPoly v = MPoly::var("Y");
  return v;
}
const MPoly& uv() {
  static const MPoly v = MPoly::var("u");
  return v;
}
const MPoly& vv() {
  static const MPoly v = MPoly::var("v");
  return v;
}

// (m, Y) -> (u, v)
RationalFunction map_u() {
  const MPoly& m = mv();
  const MPoly n = lit("136052568") * m * m + lit("1925") * Yv() - lit("24886644") * m - lit("96169512");
  const MPoly l = MPoly(3) * m - MPoly(37);
  return {n, MPoly(2) * l * l};
}
RationalFunction map_v() {
  const MPoly &m = mv(), &Y = Yv();
  const MPoly n = MPoly(175) * (lit("9012764376") * pow(m, 3) + lit("128613") * Y * m - lit("1231896204") * m * m -
                                lit("19277") * Y - lit("15193386516") * m - lit("15819539736"));
  return {n, MPoly(2) * pow(MPoly(3) * m - MPoly(37), 3)};
}

// (u, v) -> (m, Y)
MPoly map_den() { return lit("42871") * uv() - lit("11") * vv() - lit("2751064896"); }
RationalFunction map_m() {
  const MPoly n = MPoly(BigRat(37, 3)) * (lit("521") * uv() - lit("11") * vv() + lit("318899904"));
  return {n, map_den()};
}
RationalFunction map_Y() {
  const MPoly &u = uv(), &v = vv();
  const MPoly n = lit("958300") * (lit("1331") * pow(u, 3) - lit("289453824") * u * u -
                                   lit("68536946349036") * u + lit("86313500544") * v +
                                   lit("3183632918644552704"));
  const MPoly d = map_den();
  return {n, d * d};
}

MPoly cubic_rhs(const MPoly& u) { return pow(u, 3) + u * u + lit("51492677220") * u - lit("3062315437673472"); }

RationalFunction compose(const RationalFunction& r, const std::map<std::string, RationalFunction>& at) {
  return substitute_fractions(r.num, at) / substitute_fractions(r.den, at);
}

IdentityCheck zero_mod(std::string name, const RationalFunction& r, const std::string& var, const MPoly& rel) {
  const MPoly den = reduce_mod_square(r.den, var, rel);
  const MPoly num = reduce_mod_square(r.num, var, rel);
  IdentityCheck c{std::move(name), num.is_zero() && !den.is_zero(), {}};
  if (den.is_zero())
    c.detail = "denominator vanishes on the curve";
  else
    c.detail = num.is_zero() ? "reduces to 0" : "residue with " + std::to_string(num.size()) + " terms";
  return c;
}

}  // namespace

// ---- QuarticCurve --------------------------------------------------------------

QuarticCurve::QuarticCurve(const BigRat& a4, const BigRat& a3, const BigRat& a2, const BigRat& a1,
                           const BigRat& a0)
    : c_{a0, a1, a2, a3, a4} {
  if (a4.is_zero() && a3.is_zero()) throw std::invalid_argument("quartic needs a4 != 0 or a3 != 0");
}

QuarticCurve QuarticCurve::parse(const std::string& text) {
  std::vector<BigRat> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(BigRat::parse(item));
  if (v.size() != 5) throw std::invalid_argument("quartic needs five comma-separated coefficients a4,a3,a2,a1,a0");
  return {v[0], v[1], v[2], v[3], v[4]};
}

QuarticCurve QuarticCurve::from_poly(const MPoly& p, const std::string& var) {
  for (const auto& v : p.variables())
    if (v != var) throw std::invalid_argument("quartic polynomial depends on " + v);
  if (p.total_degree() > 4) throw std::invalid_argument("polynomial degree exceeds 4");
  std::array<BigRat, 5> c;
  for (unsigned i = 0; i < 5; ++i) c[i] = p.coefficient_of({{var, i}});
  return {c[4], c[3], c[2], c[1], c[0]};
}

BigRat QuarticCurve::eval(const BigRat& m) const {
  BigRat acc = c_[4];
  for (int i = 3; i >= 0; --i) acc = acc * m + c_[i];
  return acc;
}

MPoly QuarticCurve::to_poly(const std::string& var) const {
  const MPoly x = MPoly::var(var);
  MPoly acc = c_[4];
  for (int i = 3; i >= 0; --i) acc = acc * x + MPoly(c_[i]);
  return acc;
}

bool QuarticCurve::is_polynomial_square() const {
  if (c_[4].is_zero()) return false;
  const auto s = rat_sqrt_exact(c_[4]);
  if (!s) return false;
  const BigRat b = c_[3] / (BigRat(2) * *s);
  const BigRat c = (c_[2] - b * b) / (BigRat(2) * *s);
  return BigRat(2) * b * c == c_[1] && c * c == c_[0];
}

std::string QuarticCurve::str() const {
  std::string s;
  for (int i = 4; i >= 0; --i) s += (i == 4 ? "" : ",") + c_[i].str();
  return s;
}

// ---- search --------------------------------------------------------------------

std::vector<SquareValuePoint> search_square_values(const QuarticCurve& f, long height_bound,
                                                   const SieveOptions& options) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be at least 1");
  if (f.is_polynomial_square()) throw std::invalid_argument("f is the square of a polynomial");
  const IntegerForm g = integer_form(f);
  std::vector<ResidueTable> tables;
  for (int p : kSievePrimes) tables.push_back(build_table(g, p));

  const long H = height_bound;
  const long total = 2 * H + 1;
  const unsigned shards = std::max(1u, std::min<unsigned>(options.shards, static_cast<unsigned>(total)));
  std::vector<std::vector<SquareValuePoint>> found(shards);
  std::vector<std::exception_ptr> errors(shards);
  std::mutex progress_lock;

  auto run = [&](unsigned s) {
    try {
      const long lo = -H + total * s / shards;
      const long hi = -H + total * (s + 1) / shards - 1;
      std::function<void(long)> tick;
      if (options.progress) {
        const long every = std::max(1L, H / 10);
        tick = [&, s, every](long b) {
          if (b % every != 0 && b != H) return;
          std::lock_guard<std::mutex> lock(progress_lock);
          options.progress("shard " + std::to_string(s + 1) + "/" + std::to_string(shards) + ": denominator " +
                           std::to_string(b) + "/" + std::to_string(H));
        };
      }
      sieve_range(g, tables, H, lo, hi, found[s], tick);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };

  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SquareValuePoint> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  sort_points(out);
  for (const auto& pt : out) check_point(f, pt, "search_square_values");
  return out;
}

std::vector<SquareValuePoint> search_square_values_brute(const QuarticCurve& f, long height_bound) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be at least 1");
  const IntegerForm g = integer_form(f);
  std::vector<SquareValuePoint> out;
  for (long b = 1; b <= height_bound; ++b)
    for (long a = -height_bound; a <= height_bound; ++a) {
      if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
      if (auto pt = confirm(g, a, b)) out.push_back(std::move(*pt));
    }
  sort_points(out);
  return out;
}

// ---- Fermat ----------------------------------------------------------------------

SquareValuePoint fermat_step(const QuarticCurve& f) {
  const BigRat& a0 = f.coeff(0);
  const BigRat& a1 = f.coeff(1);
  const BigRat& a2 = f.coeff(2);
  if (a0.is_zero()) throw DegenerateInput("Fermat step needs a nonzero constant term");
  const auto root = rat_sqrt_exact(a0);
  if (!root) throw DegenerateInput("Fermat step needs a square constant term; got " + a0.str());
  const BigRat e = *root;
  const BigRat g1 = a1 / (BigRat(2) * e);
  const BigRat g2 = (BigRat(4) * a2 * e * e - a1 * a1) / (BigRat(8) * e * e * e);
  // f - g^2 = m^3 (A + B m)
  if (BigRat(2) * e * g1 != a1 || g1 * g1 + BigRat(2) * e * g2 != a2)
    throw InternalError("tangent quadratic does not match f to second order");
  const BigRat A = f.coeff(3) - BigRat(2) * g1 * g2;
  const BigRat B = f.coeff(4) - g2 * g2;
  if (B.is_zero()) throw DegenerateInput("Fermat step degenerate");
  const BigRat m = -A / B;
  if (m.is_zero()) throw DegenerateInput("Fermat step degenerate");
  const SquareValuePoint pt{m, abs(e + g1 * m + g2 * m * m)};
  check_point(f, pt, "fermat_step");
  return pt;
}

Recentered recenter_quartic(const QuarticCurve& f, const SquareValuePoint& pt) {
  if (pt.y * pt.y != f.eval(pt.m)) throw std::invalid_argument("recenter point is not on the curve");
  if (pt.y.is_zero()) throw std::invalid_argument("cannot recenter at a root of f (y = 0)");
  // Taylor coefficients of f at m0
  std::array<BigRat, 5> c;
  for (unsigned i = 0; i < 5; ++i) c[i] = f.coeff(i);
  for (unsigned k = 0; k < 5; ++k)
    for (int i = 3; i >= static_cast<int>(k); --i) c[i] += pt.m * c[i + 1];
  Recentered r{QuarticCurve(c[4], c[3], c[2], c[1], c[0]), pt.m};
  if (r.g.coeff(0) != pt.y * pt.y) throw InternalError("recentered constant term differs from y^2");
  return r;
}

SquareValuePoint fermat_step_at(const QuarticCurve& f, const SquareValuePoint& pt) {
  const Recentered r = recenter_quartic(f, pt);
  const SquareValuePoint s = fermat_step(r.g);
  const SquareValuePoint out{r.to_original(s.m), s.y};
  check_point(f, out, "fermat_step_at");
  return out;
}

bool square_class_equivalent(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const BigRat ratio = p.terms().rbegin()->second / q.terms().rbegin()->second;
  return is_rational_square(ratio) && poly_equal(q * MPoly(ratio), p);
}

// ---- published model -------------------------------------------------------------

QuarticCurve published_condition_quartic() {
  return {BigRat::parse("4916053296"), 0, BigRat::parse("-16574603472"), 0, BigRat::parse("-106422358224")};
}

MPoly weierstrass_model_poly(const std::string& u, const std::string& v) {
  const MPoly U = MPoly::var(u), V = MPoly::var(v);
  return V * V - cubic_rhs(U);
}

std::vector<UV> published_generators() {
  return {{BigRat::parse("101376"), BigRat::parse("56565600")},
          {BigRat::parse("3761676"), BigRat::parse("-7308840000")},
          {BigRat::parse("498157004/529"), BigRat::parse("11417003301600/12167")}};
}

SquareValuePoint weierstrass_to_quartic(const UV& p, BigRat* y_signed) {
  const Assignment at{{"u", p.u}, {"v", p.v}};
  const BigRat den = poly_eval(map_den(), at);
  if (den.is_zero()) throw DegenerateInput("(u, v) is a pole of the map to the quartic model");
  const RationalFunction M = map_m(), Y = map_Y();
  const BigRat m = poly_eval(M.num, at) / poly_eval(M.den, at);
  const BigRat y = poly_eval(Y.num, at) / poly_eval(Y.den, at);
  if (y_signed) *y_signed = y;
  const SquareValuePoint out{m, abs(y)};
  check_point(published_condition_quartic(), out, "weierstrass_to_quartic");
  return out;
}

std::vector<IdentityCheck> verify_birational_maps() {
  std::vector<IdentityCheck> out;
  const MPoly f = published_condition_quartic().to_poly("m");
  const MPoly rel_uv = cubic_rhs(uv());
  const RationalFunction U = map_u(), V = map_v();
  const std::map<std::string, RationalFunction> at_mY{{"u", U}, {"v", V}};

  const RationalFunction w = substitute_fractions(weierstrass_model_poly(), at_mY);
  out.push_back(zero_mod("quartic model maps onto v^2 = u^3+u^2+51492677220u-3062315437673472 (mod Y^2 = f)", w,
                         "Y", f));

  out.push_back(zero_mod("m(u(m,Y), v(m,Y)) = m (mod Y^2 = f)", compose(map_m(), at_mY) - RationalFunction(mv()),
                         "Y", f));
  out.push_back(zero_mod("Y(u(m,Y), v(m,Y)) = Y (mod Y^2 = f)", compose(map_Y(), at_mY) - RationalFunction(Yv()),
                         "Y", f));

  const std::map<std::string, RationalFunction> at_uv{{"m", map_m()}, {"Y", map_Y()}};
  out.push_back(
      zero_mod("u(m(u,v), Y(u,v)) = u (mod the Weierstrass relation)", compose(U, at_uv) - RationalFunction(uv()),
               "v", rel_uv));
  out.push_back(
      zero_mod("v(m(u,v), Y(u,v)) = v (mod the Weierstrass relation)", compose(V, at_uv) - RationalFunction(vv()),
               "v", rel_uv));

  const auto gens = published_generators();
  const MPoly W = weierstrass_model_poly();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const BigRat r = poly_eval(W, {{"u", gens[i].u}, {"v", gens[i].v}});
    out.push_back({"generator " + std::to_string(i + 1) + " (" + gens[i].u.str() + ", " + gens[i].v.str() +
                       ") on the Weierstrass model",
                   r.is_zero(), r.is_zero() ? "v^2 - rhs = 0" : "v^2 - rhs = " + r.str()});
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IdentityCheck c{"generator " + std::to_string(i + 1) + " maps to a square value of the quartic", false, {}};
    try {
      const SquareValuePoint pt = weierstrass_to_quartic(gens[i]);
      c.pass = is_rational_square(published_condition_quartic().eval(pt.m));
      c.detail = "m = " + pt.m.str();
    } catch (const DegenerateInput& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sextic
