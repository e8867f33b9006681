#include "sextic/mordell.hpp"

#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/factor.hpp"

namespace sextic {

BigRat WeierstrassCurve::c4() const {
  const BigRat B2 = b2();
  return B2 * B2 - BigRat(24) * b4();
}

BigRat WeierstrassCurve::c6() const {
  const BigRat B2 = b2();
  return -B2 * B2 * B2 + BigRat(36) * B2 * b4() - BigRat(216) * b6();
}

BigRat WeierstrassCurve::discriminant() const {
  const BigRat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - BigRat(8) * B4 * B4 * B4 - BigRat(27) * B6 * B6 + BigRat(9) * B2 * B4 * B6;
}

bool WeierstrassCurve::is_integral() const {
  return a1.is_integer() && a2.is_integer() && a3.is_integer() && a4.is_integer() && a6.is_integer();
}

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return true;
  const BigRat& x = p.x;
  const BigRat& y = p.y;
  return y * y + e.a1 * x * y + e.a3 * y == ((x + e.a2) * x + e.a4) * x + e.a6;
}

CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(e, p) || !on_curve(e, q)) throw NotOnCurve("add: point not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  BigRat lambda, nu;
  if (p.x != q.x) {
    const BigRat dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  } else {
    const BigRat d = BigRat(2) * p.y + e.a1 * p.x + e.a3;
    if (p.y != q.y || d.is_zero()) return CurvePoint::at_infinity();
    lambda = (BigRat(3) * p.x * p.x + BigRat(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / d;
    nu = (-p.x * p.x * p.x + e.a4 * p.x + BigRat(2) * e.a6 - e.a3 * p.y) / d;
  }
  const BigRat x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  const BigRat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint::affine(x3, y3);
}

CurvePoint subtract(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  return add(e, p, negate(e, q));
}

CurvePoint scalar_mul(const WeierstrassCurve& e, long n, const CurvePoint& p) {
  if (!on_curve(e, p)) throw NotOnCurve("scalar_mul: point not on the curve");
  CurvePoint base = n < 0 ? negate(e, p) : p;
  unsigned long k = n < 0 ? 0ul - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::at_infinity();
  while (k) {
    if (k & 1ul) acc = add(e, acc, base);
    k >>= 1;
    if (k) base = add(e, base, base);
  }
  return acc;
}

MordellCurve::MordellCurve(BigRat k) : k_(std::move(k)) {
  if (k_.is_zero()) throw DegenerateInput("Mordell curve needs k != 0 (y^2 = x^3 is singular)");
}

bool on_curve(const MordellCurve& e, const CurvePoint& p) {
  return p.infinity || p.y * p.y == p.x * p.x * p.x + e.k();
}
CurvePoint negate(const MordellCurve& e, const CurvePoint& p) { return negate(e.weierstrass(), p); }
CurvePoint add(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q) {
  return add(e.weierstrass(), p, q);
}
CurvePoint subtract(const MordellCurve& e, const CurvePoint& p, const CurvePoint& q) {
  return subtract(e.weierstrass(), p, q);
}
CurvePoint scalar_mul(const MordellCurve& e, long n, const CurvePoint& p) {
  return scalar_mul(e.weierstrass(), n, p);
}

MordellCurve curve_from_chain(const ChainSolution& chain) {
  if (chain.phi_value.is_zero()) throw DegenerateInput("phi = 0 gives the singular curve k = 0");
  return MordellCurve(chain.phi_value / BigRat(4));
}

CurvePoint IntegralRescale::map(const CurvePoint& p) const {
  if (p.infinity) return p;
  return CurvePoint::affine(lambda * lambda * p.x, lambda * lambda * lambda * p.y);
}

IntegralRescale integral_rescale(const MordellCurve& e) {
  // smallest l with den(k) | l^6
  const Factorization f = factor(e.k().den());
  if (!f.complete) throw FactorizationIncomplete(f.cofactor);
  BigInt l = 1;
  for (const auto& pp : f.factors)
    for (unsigned i = 0; i < (pp.exponent + 5) / 6; ++i) l *= pp.prime;
  const BigRat lam(l);
  return {MordellCurve(e.k() * pow(lam, 6)), lam};
}

ChainPoints points_from_chain(const ChainSolution& chain, const MordellCurve& curve) {
  if (BigRat(4) * curve.k() != chain.phi_value)
    throw std::invalid_argument("curve constant is not phi/4 of the chain");
  ChainPoints out;
  auto emit = [&](const BigRat& a, const BigRat& b, const BigRat& c) {
    const CurvePoint p = CurvePoint::affine(a * b, (a * a * a + b * b * b - c * c * c) / BigRat(2));
    ++out.emitted;
    if (!on_curve(curve, p)) throw InternalError("chain point (" + p.x.str() + ", " + p.y.str() + ") misses the curve");
    for (const auto& q : out.points)
      if (q == p) return;
    out.points.push_back(p);
  };
  for (const auto& t : chain.triples) {
    emit(t.x, t.y, t.z);
    emit(t.y, t.z, t.x);
    emit(t.x, t.z, t.y);
  }
  return out;
}

BigReal naive_height(const CurvePoint& p, long precision) {
  if (p.infinity) throw std::invalid_argument("naive height of the point at infinity");
  const BigInt n = abs(p.x.num());
  const BigInt d = p.x.den();
  return log_abs(n > d ? n : d, precision);
}

}  // namespace sextic
