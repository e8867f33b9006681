#include "sextic/heights.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

constexpr long kInfiniteValuation = 1L << 40;
constexpr long kGuardBits = 64;

long valuation_int(BigInt n, const BigInt& p) {
  if (n == 0) return kInfiniteValuation;
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

// A change with u = p keeping the model integral, if one exists.
std::optional<ModelChange> shrink_at(const WeierstrassCurve& e, long p) {
  const long u2 = p * p, u3 = p * p * p;
  for (long r = 0; r < u2; ++r)
    for (long s = 0; s < p; ++s)
      for (long t = 0; t < u3; ++t) {
        const ModelChange c{BigRat(p), BigRat(r), BigRat(s), BigRat(t)};
        if (c.apply(e).is_integral()) return c;
      }
  return std::nullopt;
}

BigReal from_rat(const BigRat& q, long prec) { return BigReal(q, prec); }

}  // namespace

std::string to_string(HeightNormalization n) { return n == HeightNormalization::kLimitX ? "x-limit" : "half"; }

HeightNormalization parse_normalization(const std::string& s) {
  if (s == "x-limit") return HeightNormalization::kLimitX;
  if (s == "half") return HeightNormalization::kHalf;
  throw std::invalid_argument("unknown height normalization '" + s + "' (x-limit or half)");
}

long valuation(const BigRat& q, const BigInt& p) {
  if (q.is_zero()) return kInfiniteValuation;
  return valuation_int(q.num(), p) - valuation_int(q.den(), p);
}

WeierstrassCurve ModelChange::apply(const WeierstrassCurve& e) const {
  const BigRat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  WeierstrassCurve o;
  o.a1 = (e.a1 + BigRat(2) * s) / u;
  o.a2 = (e.a2 - s * e.a1 + BigRat(3) * r - s * s) / u2;
  o.a3 = (e.a3 + r * e.a1 + BigRat(2) * t) / u3;
  o.a4 = (e.a4 - s * e.a3 + BigRat(2) * r * e.a2 - (t + r * s) * e.a1 + BigRat(3) * r * r - BigRat(2) * s * t) / u4;
  o.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1) / u6;
  return o;
}

CurvePoint ModelChange::apply(const CurvePoint& p) const {
  if (p.infinity) return p;
  const BigRat xr = p.x - r;
  return CurvePoint::affine(xr / (u * u), (p.y - s * xr - t) / (u * u * u));
}

CurvePoint MinimalModel::map(const CurvePoint& p) const {
  if (p.infinity) return p;
  CurvePoint q = CurvePoint::affine(lambda * lambda * p.x, lambda * lambda * lambda * p.y);
  for (const auto& c : changes) q = c.apply(q);
  return q;
}

MinimalModel minimal_model(const MordellCurve& e, const FactorBudget& budget) {
  const IntegralRescale ir = integral_rescale(e);
  BigRat lambda = ir.lambda;
  BigInt k = ir.curve.k().num();

  const Factorization f = factor(k, budget);
  if (!f.complete) throw FactorizationIncomplete(f.cofactor);
  for (const auto& pp : f.factors) {
    if (pp.prime < 5 || pp.exponent < 6) continue;
    const unsigned q = pp.exponent / 6;
    BigInt pq;
    mpz_pow_ui(pq.get_mpz_t(), pp.prime.get_mpz_t(), q);
    BigInt p6q;
    mpz_pow_ui(p6q.get_mpz_t(), pq.get_mpz_t(), 6);
    k /= p6q;
    lambda /= BigRat(pq);
  }

  MinimalModel m{WeierstrassCurve{0, 0, 0, 0, BigRat(k)}, lambda, {}, {}};
  for (long p : {2L, 3L})
    while (auto c = shrink_at(m.curve, p)) {
      m.curve = c->apply(m.curve);
      m.changes.push_back(*c);
    }

  const BigRat disc = m.curve.discriminant();
  std::vector<BigInt> support{2, 3};
  for (const auto& pp : f.factors)
    if (pp.prime > 3) support.push_back(pp.prime);
  for (const auto& p : support) {
    const long v = valuation(disc, p);
    if (v > 0) m.bad_primes.push_back({p, static_cast<unsigned>(v)});
  }
  return m;
}

BigReal archimedean_height(const WeierstrassCurve& e, const BigRat& xq, long precision, int iterations) {
  const long prec = precision;
  auto R = [&](const BigRat& q) { return from_rat(q, prec); };
  const BigReal b2 = R(e.b2()), b4 = R(e.b4()), b6 = R(e.b6()), b8 = R(e.b8());
  // invariants after x -> x + 1
  const BigReal b2p = R(e.b2() - BigRat(12));
  const BigReal b4p = R(e.b4() - e.b2() + BigRat(6));
  const BigReal b6p = R(e.b6() - BigRat(2) * e.b4() + e.b2() - BigRat(4));
  const BigReal b8p = R(e.b8() - BigRat(3) * e.b6() + BigRat(3) * e.b4() - e.b2() + BigRat(3));

  const BigReal x = R(xq);
  const BigReal half = R(BigRat(1, 2));
  const BigReal one = BigReal::from_long(1, prec), two = BigReal::from_long(2, prec),
                four = BigReal::from_long(4, prec);
  bool beta = abs(x) >= half;
  BigReal t = beta ? one / x : one / (x + one);
  BigReal mu = -log(abs(t));
  BigReal f = one;
  for (int n = 0; n < iterations; ++n) {
    f /= four;
    const BigReal& B2 = beta ? b2 : b2p;
    const BigReal& B4 = beta ? b4 : b4p;
    const BigReal& B6 = beta ? b6 : b6p;
    const BigReal& B8 = beta ? b8 : b8p;
    const BigReal t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    const BigReal w = B6 * t4 + two * B4 * t3 + B2 * t2 + four * t;
    const BigReal z = one - B4 * t2 - two * B6 * t3 - B8 * t4;
    if (abs(w) <= two * abs(z)) {
      mu += f * log(abs(z));
      t = w / z;
    } else {
      const BigReal zw = beta ? z + w : z - w;
      mu += f * log(abs(zw));
      t = w / zw;
      beta = !beta;
    }
  }
  return mu;
}

HeightCalculator::HeightCalculator(const MordellCurve& e, long precision, HeightNormalization normalization,
                                   const FactorBudget& budget)
    : curve_(e),
      precision_(precision),
      normalization_(normalization),
      model_(minimal_model(e, budget)),
      tail_(precision + kGuardBits) {
  if (precision < 32) throw std::invalid_argument("height precision must be at least 32 bits");
  // |log|z|| per step is at most log of a polynomial bound in H below; the
  // geometric tail after N steps is (4/3) 4^-N times that.
  const WeierstrassCurve& c = model_.curve;
  BigRat H = 4;
  for (const BigRat& b : {abs(c.b2()), BigRat(2) * abs(c.b4()), BigRat(2) * abs(c.b6()), abs(c.b8())})
    H = std::max(H, b);
  const double logH = log(BigReal(H, 64)).to_double();
  const double per_step = 4.0 * logH + 10.0;
  iterations_ = static_cast<int>(std::ceil((precision + std::log2(per_step) + 4) / 2.0));
  tail_ = BigReal::from_double(per_step * 4.0 / 3.0, precision + kGuardBits) *
          pow2(-2 * static_cast<long>(iterations_), precision + kGuardBits);
}

HeightTerms HeightCalculator::terms(const CurvePoint& p) const {
  if (!on_curve(curve_, p)) throw NotOnCurve("height: point not on the curve");
  if (p.infinity) throw std::invalid_argument("height terms of the point at infinity");
  const long wp = precision_ + kGuardBits;
  const CurvePoint q = model_.map(p);
  const WeierstrassCurve& c = model_.curve;
  HeightTerms out{archimedean_height(c, q.x, wp, iterations_), log_abs(q.x.den(), wp), {}};

  const BigRat &x = q.x, &y = q.y;
  const BigRat psi3 = BigRat(3) * x * x * x * x + c.b2() * x * x * x + BigRat(3) * c.b4() * x * x +
                      BigRat(3) * c.b6() * x + c.b8();
  for (const auto& bp : model_.bad_primes) {
    const BigInt& pr = bp.prime;
    const long N = bp.exponent;
    const long A = valuation(BigRat(3) * x * x + BigRat(2) * c.a2 * x + c.a4 - c.a1 * y, pr);
    const long B = valuation(BigRat(2) * y + c.a1 * x + c.a3, pr);
    if (A <= 0 || B <= 0) continue;  // nonsingular reduction: only the denominator term
    BigRat L;
    if (valuation(c.c4(), pr) == 0) {
      const BigRat M = std::min(BigRat(B), BigRat(N, 2));
      L = M * (M - BigRat(N)) / BigRat(N);
    } else {
      const long C = valuation(psi3, pr);
      L = (C >= 3 * B) ? BigRat(-2 * B, 3) : BigRat(-C, 4);
    }
    out.local.emplace_back(pr, L);
  }
  return out;
}

HeightValue HeightCalculator::height(const CurvePoint& p) const {
  const long wp = precision_ + kGuardBits;
  if (!on_curve(curve_, p)) throw NotOnCurve("height: point not on the curve");
  if (p.infinity) return {BigReal::from_long(0, wp), BigReal::from_long(0, wp)};
  const HeightTerms t = terms(p);
  BigReal h = t.archimedean + t.denominator;
  for (const auto& [pr, L] : t.local) h += BigReal(L, wp) * log_abs(pr, wp);
  // rounding in the series: a few ulps per step relative to the running sum
  BigReal err = tail_ + pow2(-(precision_ + kGuardBits) + 16, wp) * (abs(h) + BigReal::from_long(iterations_, wp));
  if (normalization_ == HeightNormalization::kHalf) {
    h /= BigReal::from_long(2, wp);
    err /= BigReal::from_long(2, wp);
  }
  return {h, err};
}

HeightValue HeightCalculator::pairing(const CurvePoint& p, const CurvePoint& q) const {
  const HeightValue hp = height(p), hq = height(q), hs = height(add(curve_, p, q));
  const BigReal two = BigReal::from_long(2, precision_ + kGuardBits);
  return {(hs.value - hp.value - hq.value) / two, (hs.error + hp.error + hq.error) / two};
}

HeightValue canonical_height(const MordellCurve& e, const CurvePoint& p, long precision,
                             HeightNormalization normalization) {
  return HeightCalculator(e, precision, normalization).height(p);
}

HeightValue height_pairing(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q, long precision,
                           HeightNormalization normalization) {
  return HeightCalculator(e, precision, normalization).pairing(p, q);
}

}  // namespace sextic
