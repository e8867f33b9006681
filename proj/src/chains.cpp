#include "sextic/chains.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sextic/chain_forms.hpp"
#include "sextic/errors.hpp"

namespace sextic {

namespace {

const MPoly& vx() {
  static const MPoly v = MPoly::var("x");
  return v;
}
const MPoly& vy() {
  static const MPoly v = MPoly::var("y");
  return v;
}
const MPoly& vz() {
  static const MPoly v = MPoly::var("z");
  return v;
}

Assignment at(const Triple& t) { return {{"x", t.x}, {"y", t.y}, {"z", t.z}}; }

// Q and C after symmetric reduction: Q = a*e2 + q0(e1, z), C = cr(e1, e2, z).
struct Reduced {
  BigRat a;
  MPoly q0;
  MPoly cr;
};

Reduced reduce_forms(const MPoly& Q, const MPoly& C) {
  for (const auto* p : {&Q, &C})
    for (const auto& v : p->variables())
      if (v != "x" && v != "y" && v != "z")
        throw std::invalid_argument("Q and C must be polynomials in x, y, z; found " + v);
  const MPoly qr = symmetric_reduce(Q, "x", "y");
  const MPoly cr = symmetric_reduce(C, "x", "y");
  const MPoly lin = qr.coefficient("e2", 1);
  if (qr.degree_in("e2") != 1 || !lin.is_constant())
    throw DegenerateInput("Q is not linear in e2 with a constant coefficient");
  return {lin.constant_value(), qr.coefficient("e2", 0), cr};
}

MPoly lift(const BigRat& q) { return MPoly(q); }

std::array<MPoly, 4> cubic_from(const Reduced& red, const MPoly& h, const MPoly& k1, const MPoly& k2,
                                const MPoly& k3) {
  const MPoly e1 = k1 - h * vz();
  const MPoly e2 = (k2 - poly_substitute(red.q0, {{"e1", e1}})) * MPoly(inverse(red.a));
  const MPoly cubic = poly_substitute(red.cr, {{"e1", e1}, {"e2", e2}}) - k3;
  if (cubic.degree_in("z") > 3) throw DegenerateInput("eliminated polynomial in z has degree above 3");
  return {cubic.coefficient("z", 0), cubic.coefficient("z", 1), cubic.coefficient("z", 2),
          cubic.coefficient("z", 3)};
}

// (x - y)^2 at the third root, as a quotient of polynomials in the parameters.
RationalFunction completion_symbolic(const Reduced& red, const MPoly& h, const MPoly& k1, const MPoly& k2,
                                     const MPoly& k3, const MPoly& g1, const MPoly& g2) {
  const auto c = cubic_from(red, h, k1, k2, k3);
  if (c[3].is_zero()) throw DegenerateInput("eliminated polynomial in z is not a cubic");
  // gamma3 = -(c2 + c3*(g1 + g2)) / c3
  const RationalFunction g3(-(c[2] + c[3] * (g1 + g2)), c[3]);
  const RationalFunction e1 = RationalFunction(k1) - RationalFunction(h) * g3;
  const RationalFunction q0 = substitute_fractions(red.q0, {{"e1", e1}, {"z", g3}});
  const RationalFunction scale(MPoly(BigRat(4) / red.a));
  return e1 * e1 - scale * (RationalFunction(k2) - q0);
}

BigRat constant_of(const MPoly& p) { return p.constant_value(); }

std::vector<std::string> vanishing_factors_family1(const BigRat& m, const BigRat& n) {
  const BigRat t = forms::family1_t(m, n);
  const BigRat t3 = t * t * t;
  const BigRat big = BigRat(3) * (m - n) * pow(t, 6) + (BigRat(2) * m - n) * (m - BigRat(2) * n) * pow(t, 4) -
                     BigRat(3) * (m * m * m + m * n * n - n * n * n) * t * t - BigRat(3) * m * m * t + m -
                     BigRat(2) * n;
  const std::vector<std::pair<std::string, BigRat>> named = {
      {"m-n", m - n},
      {"(m+n)t+2", (m + n) * t + BigRat(2)},
      {"(m-2n)t-1", (m - BigRat(2) * n) * t - BigRat(1)},
      {"(2m-n)t+1", (BigRat(2) * m - n) * t + BigRat(1)},
      {"2t^2+m-2n", BigRat(2) * t * t + m - BigRat(2) * n},
      {"(m-n)t^3+t^2+m", (m - n) * t3 + t * t + m},
      {"t^3-1", t3 - BigRat(1)},
      {"3(m-n)t^6+(2m-n)(m-2n)t^4-3(m^3+mn^2-n^3)t^2-3m^2t+m-2n", big},
  };
  std::vector<std::string> out;
  for (const auto& [name, v] : named)
    if (v.is_zero()) out.push_back(name);
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
  return s;
}

bool all_zero(const Triple& t) { return t.x.is_zero() && t.y.is_zero() && t.z.is_zero(); }

}  // namespace

BigRat phi(const Triple& t) {
  const BigRat x3 = t.x * t.x * t.x;
  const BigRat y3 = t.y * t.y * t.y;
  const BigRat z3 = t.z * t.z * t.z;
  return x3 * x3 + y3 * y3 + z3 * z3 - BigRat(2) * (x3 * y3 + x3 * z3 + y3 * z3);
}

MPoly phi_polynomial(const std::string& x, const std::string& y, const std::string& z) {
  const MPoly x3 = pow(MPoly::var(x), 3);
  const MPoly y3 = pow(MPoly::var(y), 3);
  const MPoly z3 = pow(MPoly::var(z), 3);
  return x3 * x3 + y3 * y3 + z3 * z3 - MPoly(2) * (x3 * y3 + x3 * z3 + y3 * z3);
}

MPoly quadratic_form() {
  const MPoly &x = vx(), &y = vy(), &z = vz();
  return x * x + y * y + z * z + x * y + y * z + z * x;
}

MPoly cubic_form() {
  const MPoly &x = vx(), &y = vy(), &z = vz();
  return pow(x, 3) + pow(y, 3) + pow(z, 3) +
         MPoly(2) * (x * x * y + x * y * y + x * x * z + x * z * z + y * y * z + y * z * z) +
         MPoly(2) * x * y * z;
}

bool same_up_to_swap(const Triple& a, const Triple& b) {
  return a.z == b.z && ((a.x == b.x && a.y == b.y) || (a.x == b.y && a.y == b.x));
}

ChainSolution verify_chain(const std::vector<Triple>& triples) {
  if (triples.size() < 2) throw std::invalid_argument("a chain needs at least two triples");
  ChainSolution out;
  out.triples = triples;
  out.phi_value = phi(triples.front());
  for (std::size_t i = 1; i < triples.size(); ++i) {
    const BigRat v = phi(triples[i]);
    if (v != out.phi_value) throw ChainMismatch(i + 1, out.phi_value.str(), v.str());
  }
  for (std::size_t i = 0; i < triples.size() && !out.trivial; ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      if (same_up_to_swap(triples[i], triples[j])) {
        out.trivial = true;
        break;
      }
  return out;
}

std::vector<Triple> normalize_chain(const std::vector<Triple>& triples) {
  BigInt l = 1;
  for (const auto& t : triples)
    for (const BigRat* c : {&t.x, &t.y, &t.z}) l = lcm(l, c->den());
  BigInt g = 0;
  for (const auto& t : triples)
    for (const BigRat* c : {&t.x, &t.y, &t.z}) g = gcd(g, (*c * BigRat(l)).num());
  if (g == 0) throw DegenerateInput("every coordinate of the chain is zero");

  int sign = 0;
  for (const auto& t : triples) {
    for (const BigRat* c : {&t.x, &t.y, &t.z})
      if (!c->is_zero()) {
        sign = c->sign();
        break;
      }
    if (sign != 0) break;
  }
  const BigRat scale = BigRat(l * sign, g);
  std::vector<Triple> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back({t.x * scale, t.y * scale, t.z * scale});
  return out;
}

bool chains_equivalent(const std::vector<Triple>& a, const std::vector<Triple>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n > 8) throw std::invalid_argument("chains_equivalent: chain too long for exhaustive matching");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BigRat> fa(3 * n), fb(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    fb[3 * i] = b[i].x;
    fb[3 * i + 1] = b[i].y;
    fb[3 * i + 2] = b[i].z;
  }
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        const Triple& t = a[perm[i]];
        const bool sw = (mask >> i) & 1u;
        fa[3 * i] = sw ? t.y : t.x;
        fa[3 * i + 1] = sw ? t.x : t.y;
        fa[3 * i + 2] = t.z;
      }
      std::optional<BigRat> lambda;
      bool ok = true;
      for (std::size_t k = 0; k < fa.size() && ok; ++k) {
        if (fa[k].is_zero() || fb[k].is_zero()) {
          ok = fa[k].is_zero() && fb[k].is_zero();
          continue;
        }
        const BigRat r = fb[k] / fa[k];
        if (!lambda)
          lambda = r;
        else
          ok = *lambda == r;
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<IdentityCheck> verify_core_identities(bool corrupt_phi) {
  MPoly f = phi_polynomial();
  if (corrupt_phi) f += pow(vx(), 3) * pow(vy(), 3);

  const MPoly s = pow(vx(), 3) + pow(vy(), 3) - pow(vz(), 3);
  const MPoly id1 = s * s - MPoly(4) * pow(vx() * vy(), 3);
  const MPoly id2 = MPoly(4) * pow(quadratic_form(), 3) - MPoly(3) * pow(cubic_form(), 2);

  auto check = [&](std::string name, const MPoly& rhs) {
    const MPoly diff = f - rhs;
    IdentityCheck c{std::move(name), diff.is_zero(), {}};
    c.detail = c.pass ? "exact expansion agrees" : "difference " + diff.str();
    return c;
  };
  return {check("phi = (x^3+y^3-z^3)^2 - 4(xy)^3", id1), check("phi = 4Q^3 - 3C^2", id2)};
}

PairSeed make_seed(const Triple& sol1, const Triple& sol2, const BigRat& h, const MPoly& Q, const MPoly& C) {
  if (swap_variables(Q, "x", "y") != Q) throw std::invalid_argument("Q is not symmetric in x and y");
  if (swap_variables(C, "x", "y") != C) throw std::invalid_argument("C is not symmetric in x and y");
  if (same_up_to_swap(sol1, sol2)) throw DegenerateInput("the two solutions coincide up to x<->y");
  PairSeed s{sol1, sol2, h, sol1.x + sol1.y + h * sol1.z, poly_eval(Q, at(sol1)), poly_eval(C, at(sol1)), Q, C};
  if (sol2.x + sol2.y + h * sol2.z != s.k1)
    throw std::invalid_argument("second solution fails the linear equation");
  if (poly_eval(Q, at(sol2)) != s.k2) throw std::invalid_argument("second solution fails the Q-equation");
  if (poly_eval(C, at(sol2)) != s.k3) throw std::invalid_argument("second solution fails the C-equation");
  return s;
}

std::array<MPoly, 4> eliminate_to_cubic(const MPoly& Q, const MPoly& C, const MPoly& h, const MPoly& k1,
                                        const MPoly& k2, const MPoly& k3) {
  for (const auto* p : {&h, &k1, &k2, &k3})
    for (const auto& v : p->variables())
      if (v == "x" || v == "y" || v == "z" || v == "e1" || v == "e2")
        throw std::invalid_argument("parameter polynomial uses reserved name " + v);
  return cubic_from(reduce_forms(Q, C), h, k1, k2, k3);
}

BigRat third_root(const PairSeed& seed) {
  const auto c = eliminate_to_cubic(seed.Q, seed.C, lift(seed.h), lift(seed.k1), lift(seed.k2), lift(seed.k3));
  const BigRat c3 = constant_of(c[3]), c2 = constant_of(c[2]), c1 = constant_of(c[1]), c0 = constant_of(c[0]);
  if (c3.is_zero()) throw DegenerateInput("eliminated polynomial in z is not a cubic (leading coefficient 0)");
  const BigRat& g1 = seed.sol1.z;
  const BigRat& g2 = seed.sol2.z;
  // synthetic division by (z - g1), then by (z - g2)
  const BigRat b2 = c3;
  const BigRat b1 = c2 + g1 * b2;
  const BigRat b0 = c1 + g1 * b1;
  if (!(c0 + g1 * b0).is_zero()) throw InternalError("first known root does not divide the cubic");
  const BigRat d0 = b1 + g2 * b2;
  if (!(b0 + g2 * d0).is_zero()) throw InternalError("second known root does not divide the cubic");
  return -d0 / b2;
}

BigRat completion_discriminant(const PairSeed& seed, const BigRat& gamma3) {
  const Reduced red = reduce_forms(seed.Q, seed.C);
  const BigRat e1 = seed.k1 - seed.h * gamma3;
  const BigRat e2 = (seed.k2 - poly_eval(red.q0, {{"e1", e1}, {"z", gamma3}})) / red.a;
  return e1 * e1 - BigRat(4) * e2;
}

std::optional<std::pair<Triple, Triple>> complete_triple(const PairSeed& seed, const BigRat& gamma3) {
  const BigRat disc = completion_discriminant(seed, gamma3);
  const auto s = rat_sqrt_exact(disc);
  if (!s) return std::nullopt;
  const BigRat e1 = seed.k1 - seed.h * gamma3;
  const BigRat x = (e1 + *s) / BigRat(2);
  const BigRat y = (e1 - *s) / BigRat(2);
  return std::pair{Triple{x, y, gamma3}, Triple{y, x, gamma3}};
}

// ---- family 1 ----------------------------------------------------------------

PairSeed family1_pair(const BigRat& m, const BigRat& n, const BigRat& p, const BigRat& q) {
  if (p.is_zero() && q.is_zero()) throw DegenerateInput("family-1 pair degenerate: p and q both vanish");
  if (p == q) throw DegenerateInput("family-1 pair degenerate: p = q makes the second solution the x<->y image of the first");
  const auto f = forms::family1_pair_forms(m, n, p, q);
  const Triple s1{f.alpha1, f.beta1, f.gamma1};
  const Triple s2{f.alpha2, f.beta2, f.gamma2};
  if (same_up_to_swap(s1, s2))
    throw DegenerateInput("family-1 pair degenerate: (alpha1,beta1,gamma1) = (alpha2,beta2,gamma2)");
  const MPoly C = pow(vx(), 3) + pow(vy(), 3) - pow(vz(), 3);
  return make_seed(s1, s2, forms::family1_h(m, n), vx() * vy(), C);
}

BigRat family1_gamma3_closed(const BigRat& m, const BigRat& n, const BigRat& p, const BigRat& q) {
  const auto g = forms::family1_gamma3(m, n, p, q, forms::family1_t(m, n));
  if (g.den.is_zero()) throw DegenerateInput("gamma3 denominator (t-1)(t^2+t+1) vanishes");
  return g.num / g.den;
}

SymbolicQuartic family1_quartic_symbolic() {
  const MPoly m = MPoly::var("m"), n = MPoly::var("n"), p = MPoly::var("p"), q = MPoly::var("q");
  const auto f = forms::family1_pair_forms(m, n, p, q);
  const MPoly h = forms::family1_h(m, n);
  const MPoly k1 = f.alpha1 + f.beta1 + h * f.gamma1;
  const MPoly k2 = f.alpha1 * f.beta1;
  const MPoly k3 = pow(f.alpha1, 3) + pow(f.beta1, 3) - pow(f.gamma1, 3);
  const MPoly C = pow(vx(), 3) + pow(vy(), 3) - pow(vz(), 3);
  const RationalFunction d = completion_symbolic(reduce_forms(vx() * vy(), C), h, k1, k2, k3, f.gamma1, f.gamma2);
  return {d.num, d.den};
}

MPoly family1_quartic(const BigRat& m, const BigRat& n) {
  const MPoly p = MPoly::var("p"), q = MPoly::var("q");
  const MPoly mm = m, nn = n;
  const auto f = forms::family1_pair_forms(mm, nn, p, q);
  const MPoly h = forms::family1_h(mm, nn);
  const MPoly k1 = f.alpha1 + f.beta1 + h * f.gamma1;
  const MPoly k2 = f.alpha1 * f.beta1;
  const MPoly k3 = pow(f.alpha1, 3) + pow(f.beta1, 3) - pow(f.gamma1, 3);
  const MPoly C = pow(vx(), 3) + pow(vy(), 3) - pow(vz(), 3);
  const RationalFunction d = completion_symbolic(reduce_forms(vx() * vy(), C), h, k1, k2, k3, f.gamma1, f.gamma2);
  if (!d.den.is_constant()) throw InternalError("family-1 quartic denominator depends on p, q");
  return d.num * MPoly(inverse(d.den.constant_value()));
}

std::pair<BigRat, BigRat> family1_pq_choice(const BigRat& m, const BigRat& n) {
  const auto pq = forms::family1_pq_choice(m, n, forms::family1_t(m, n));
  return {pq[0], pq[1]};
}

ChainSolution family1_chain(const BigRat& m, const BigRat& n) {
  const auto c = forms::family1_chain_forms(m, n, forms::family1_t(m, n));
  std::vector<Triple> triples{{c[0], c[1], c[2]}, {c[3], c[4], c[5]}, {c[6], c[7], c[8]}};
  const bool zero_triple = std::any_of(triples.begin(), triples.end(), all_zero);
  if (!zero_triple) {
    ChainSolution chain = verify_chain(normalize_chain(triples));
    if (!chain.trivial) return chain;
  }
  const auto vanish = vanishing_factors_family1(m, n);
  throw DegenerateInput("family-1 chain degenerate at (m,n) = (" + m.str() + "," + n.str() + ")" +
                        (vanish.empty() ? std::string(": repeated triple") : ": vanishing " + join(vanish)));
}

ChainSolution family1_chain_by_elimination(const BigRat& m, const BigRat& n) {
  const auto [p, q] = family1_pq_choice(m, n);
  const PairSeed seed = family1_pair(m, n, p, q);
  const BigRat g3 = third_root(seed);
  const auto third = complete_triple(seed, g3);
  if (!third) throw InternalError("family-1 (p,q) choice did not give a square discriminant");
  return verify_chain(normalize_chain({seed.sol1, seed.sol2, third->first}));
}

// ---- family 2 ----------------------------------------------------------------

PairSeed family2_pair(const BigRat& p, const BigRat& q, const BigRat& r, const BigRat& m) {
  const auto hq = forms::family2_h(p, q, r);
  if (hq.den.is_zero()) throw DegenerateInput("h denominator p^2+pq-pr+q^2-qr vanishes");
  const auto f = forms::family2_pair_forms(p, q, r, m);
  const Triple s1{f.alpha1, f.beta1, f.gamma1};
  const Triple s2{f.alpha2, f.beta2, f.gamma2};
  if (same_up_to_swap(s1, s2)) {
    const bool odd_part_zero = m.is_zero() || (forms::family2_f2(p, q, r).is_zero() &&
                                               forms::family2_f2(q, r, p).is_zero() &&
                                               forms::family2_f2(r, p, q).is_zero());
    throw DegenerateInput(odd_part_zero
                              ? "family-2 pair degenerate: the terms linear in m vanish (m = 0 or f2 = 0 at p, q, r)"
                              : "family-2 pair degenerate: (alpha1,beta1,gamma1) = (alpha2,beta2,gamma2)");
  }
  return make_seed(s1, s2, hq.num / hq.den, quadratic_form(), cubic_form());
}

BigRat family2_gamma3_closed(const BigRat& p, const BigRat& q, const BigRat& r, const BigRat& m) {
  const auto g = forms::family2_gamma3(p, q, r, m);
  if (g.den.is_zero()) throw DegenerateInput("gamma3 denominator vanishes");
  return g.num / g.den;
}

ConditionQuartic family2_condition_quartic(const BigRat& p, const BigRat& r) {
  ConditionQuartic out;
  if (p.is_zero() && r.is_zero()) {
    out.degenerate = true;
    out.reason = "p = r = 0: every coordinate vanishes";
    return out;
  }
  const BigRat zero = 0;
  const auto hq = forms::family2_h(p, zero, r);
  if (hq.den.is_zero()) {
    out.degenerate = true;
    out.reason = "h denominator p^2-pr vanishes";
    return out;
  }
  const BigRat h = hq.num / hq.den;
  const MPoly m = MPoly::var("m");
  const auto f = forms::family2_pair_forms(MPoly(p), MPoly(zero), MPoly(r), m);
  const MPoly Q = quadratic_form(), C = cubic_form();
  const std::map<std::string, MPoly> sol1{{"x", f.alpha1}, {"y", f.beta1}, {"z", f.gamma1}};
  const MPoly k1 = f.alpha1 + f.beta1 + MPoly(h) * f.gamma1;
  const MPoly k2 = poly_substitute(Q, sol1);
  const MPoly k3 = poly_substitute(C, sol1);
  RationalFunction d;
  try {
    d = completion_symbolic(reduce_forms(Q, C), MPoly(h), k1, k2, k3, f.gamma1, f.gamma2);
  } catch (const DegenerateInput& e) {
    out.degenerate = true;
    out.reason = e.what();
    return out;
  }
  if (!d.den.is_constant()) throw InternalError("condition quartic denominator depends on m");
  out.quartic = d.num * MPoly(inverse(d.den.constant_value()));
  if (out.quartic.is_zero()) {
    out.degenerate = true;
    out.reason = "completion discriminant vanishes identically";
  }
  return out;
}

ChainSolution family2_chain(const BigRat& p, const BigRat& r, const BigRat& m) {
  const PairSeed seed = family2_pair(p, 0, r, m);
  const BigRat g3 = third_root(seed);
  const auto third = complete_triple(seed, g3);
  if (!third)
    throw DegenerateInput("condition quartic is not a rational square at m = " + m.str());
  return verify_chain(normalize_chain({seed.sol1, seed.sol2, third->first}));
}

std::string format_chain(const ChainSolution& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.triples.size(); ++i) {
    const auto& t = chain.triples[i];
    const auto k = std::to_string(i + 1);
    os << "(x_" << k << ", y_" << k << ", z_" << k << ") = (" << t.x << ", " << t.y << ", " << t.z << ")\n";
  }
  os << "phi = " << chain.phi_value << (chain.trivial ? "  [trivial]" : "") << "\n";
  return os.str();
}

}  // namespace sextic
