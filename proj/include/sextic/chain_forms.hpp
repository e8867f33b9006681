#pragma once

// Closed-form parametrizations of the two chain families, written once as
// templates so the same text evaluates over BigRat (numeric runs) and over
// MPoly (symbolic identity checks). R needs +, -, * and construction from
// long. Quotients are returned as separate numerator/denominator pairs.

#include <array>

namespace sextic::forms {

template <class R>
R ipow(const R& a, unsigned e) {
  R r(1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

template <class R>
struct Quotient {
  R num;
  R den;
};

template <class R>
struct PairForms {
  R alpha1, beta1, gamma1;
  R alpha2, beta2, gamma2;
};

// ---------------------------------------------------------------------------
// Family 1: Q = xy, C = x^3 + y^3 - z^3, h = -(m^2 - mn + n^2).

template <class R>
R family1_t(const R& m, const R& n) {
  return m * m - m * n + n * n;
}

template <class R>
PairForms<R> family1_pair_forms(const R& m, const R& n, const R& p, const R& q) {
  const R m2 = m * m, m3 = m2 * m, n2 = n * n, n3 = n2 * n;
  const R quart = m2 * m2 - R(2) * m3 * n + R(3) * m2 * n2 - R(2) * m * n2 * n + n2 * n2;
  const R a = m3 + n3 - R(1);
  const R b = -m3 + R(3) * m2 * n - R(3) * m * n2 + R(2) * n3 + R(1);
  const R c = -R(2) * m3 + R(3) * m2 * n - R(3) * m * n2 + n3 - R(1);
  const R d = -m3 - n3 + R(1);
  PairForms<R> f;
  f.alpha1 = a * p * p + b * p * q;
  f.beta1 = c * p * q + d * q * q;
  f.gamma1 = (quart + R(2) * m - n) * p * p + (quart - m + R(2) * n) * p * q + (quart - m - n) * q * q;
  f.alpha2 = c * p * p + d * p * q;
  f.beta2 = a * p * q + b * q * q;
  f.gamma2 = (quart - m - n) * p * p + (quart + R(2) * m - n) * p * q + (quart - m + R(2) * n) * q * q;
  return f;
}

template <class R>
R family1_h(const R& m, const R& n) {
  return -family1_t(m, n);
}

/// Third root of the eliminated cubic, as published. t is passed separately
/// so it can stay a free symbol.
template <class R>
Quotient<R> family1_gamma3(const R& m, const R& n, const R& p, const R& q, const R& t) {
  const R m2 = m * m, n2 = n * n;
  auto mp = [&](unsigned a, unsigned b) { return ipow(m, a) * ipow(n, b); };
  // degree-10 part shared by the p^2 and pq coefficients
  const R d10 = mp(10, 0) - R(5) * mp(9, 1) + R(15) * mp(8, 2) - R(30) * mp(7, 3) + R(45) * mp(6, 4) -
                R(51) * mp(5, 5) + R(45) * mp(4, 6) - R(30) * mp(3, 7) + R(15) * mp(2, 8) - R(5) * mp(1, 9) +
                mp(0, 10);
  const R cp2 = d10 + R(2) * mp(7, 0) - R(10) * mp(6, 1) + R(24) * mp(5, 2) - R(38) * mp(4, 3) +
                R(40) * mp(3, 4) - R(30) * mp(2, 5) + R(14) * mp(1, 6) - R(4) * mp(0, 7) + R(5) * mp(4, 0) -
                R(10) * mp(3, 1) + R(15) * mp(2, 2) - R(10) * mp(1, 3) + R(5) * mp(0, 4) + m - R(2) * n;
  const R cpq = d10 + R(5) * mp(7, 0) - R(19) * mp(6, 1) + R(42) * mp(5, 2) - R(59) * mp(4, 3) +
                R(58) * mp(3, 4) - R(39) * mp(2, 5) + R(17) * mp(1, 6) - R(4) * mp(0, 7) + R(2) * mp(4, 0) -
                R(4) * mp(3, 1) + R(6) * mp(2, 2) - R(4) * mp(1, 3) + R(2) * mp(0, 4) + m + n;
  const R quart = m2 * m2 - R(2) * mp(3, 1) + R(3) * m2 * n2 - R(2) * mp(1, 3) + n2 * n2;
  const R cq2 = (t - R(1)) * (quart + t + R(1)) * (quart + R(2) * m - n);
  return {cp2 * p * p + cpq * p * q + cq2 * q * q, (t - R(1)) * (t * t + t + R(1))};
}

/// The (p, q) choice that makes the completion quartic a square.
template <class R>
std::array<R, 2> family1_pq_choice(const R& m, const R& n, const R& t) {
  const R t3 = t * t * t;
  return {-(m - n) * ((m + n) * t + R(2)) * (t3 - R(1)),
          ((R(2) * m - n) * t + R(1)) * ((m - n) * t3 + t * t + m)};
}

/// The nine coordinates of the explicit parametric chain.
template <class R>
std::array<R, 9> family1_chain_forms(const R& m, const R& n, const R& t) {
  auto mp = [&](unsigned a, unsigned b) { return ipow(m, a) * ipow(n, b); };
  auto tp = [&](unsigned e) { return ipow(t, e); };
  const R mn = m - n;
  const R big = R(3) * mn * tp(6) + (R(2) * m - n) * (m - R(2) * n) * tp(4) -
                R(3) * (mp(3, 0) + mp(1, 2) - mp(0, 3)) * tp(2) - R(3) * mp(2, 0) * t + m - R(2) * n;
  const R f_a = (m + n) * t + R(2);
  const R f_b = (m - R(2) * n) * t - R(1);
  const R f_c = (R(2) * m - n) * t + R(1);
  const R f_d = R(2) * tp(2) + m - R(2) * n;
  const R f_e = mn * tp(3) + tp(2) + m;
  const R f_f = tp(3) - R(1);

  std::array<R, 9> c;
  c[0] = mn * f_a * f_f * big;
  c[1] = f_b * f_c * f_c * f_d * f_e;
  c[2] = R(3) * mn * mn * tp(11) + R(9) * m * mn * mn * tp(9) +
         (R(19) * mp(4, 0) - R(68) * mp(3, 1) + R(81) * mp(2, 2) - R(35) * mp(1, 3) + R(4) * mp(0, 4)) * tp(7) +
         (R(4) * mp(5, 0) - R(67) * mp(4, 1) + R(163) * mp(3, 2) - R(176) * mp(2, 3) + R(104) * mp(1, 4) -
          R(26) * mp(0, 5)) * tp(5) -
         (R(23) * mp(4, 0) - R(22) * mp(3, 1) - R(18) * mp(2, 2) + R(32) * mp(1, 3) - R(13) * mp(0, 4)) * tp(4) -
         (R(19) * mp(3, 0) - R(36) * mp(2, 1) + R(39) * mp(1, 2) - R(14) * mp(0, 3)) * tp(3) +
         t * (R(2) * mp(4, 0) - R(7) * mp(3, 1) - R(6) * mp(2, 2) + R(8) * mp(1, 3) - R(4) * mp(0, 4)) +
         (m - R(2) * n) * (R(5) * mp(2, 0) - R(5) * mp(1, 1) + R(2) * mp(0, 2));
  c[3] = -mn * f_a * f_b * f_c * f_d * f_f;
  c[4] = -f_c * f_e * big;
  c[5] = R(3) * mn * mn * tp(11) -
         (R(14) * mp(4, 0) - R(37) * mp(3, 1) + R(36) * mp(2, 2) - R(22) * mp(1, 3) + R(8) * mp(0, 4)) * tp(7) -
         (R(23) * mp(5, 0) - R(98) * mp(4, 1) + R(140) * mp(3, 2) - R(103) * mp(2, 3) + R(37) * mp(1, 4) -
          R(4) * mp(0, 5)) * tp(5) +
         (mp(4, 0) + R(58) * mp(3, 1) - R(90) * mp(2, 2) + R(46) * mp(1, 3) - R(5) * mp(0, 4)) * tp(4) +
         (R(23) * mp(3, 0) - R(12) * mp(2, 1) - R(9) * mp(1, 2) + R(8) * mp(0, 3)) * tp(3) +
         (R(11) * mp(4, 0) - R(28) * mp(3, 1) + R(39) * mp(2, 2) - R(19) * mp(1, 3) + R(2) * mp(0, 4)) * t -
         (m - R(2) * n) * (mp(2, 0) + R(2) * mp(1, 1) - R(2) * mp(0, 2));
  c[6] = f_b * f_e * big;
  c[7] = mn * f_a * f_c * f_c * f_d * f_f;
  c[8] = R(3) * mn * mn * tp(11) + R(9) * mn * mn * mn * tp(9) +
         (R(13) * mp(4, 0) - R(35) * mp(3, 1) + R(36) * mp(2, 2) - R(14) * mp(1, 3) + mp(0, 4)) * tp(7) +
         (R(19) * mp(5, 0) - R(55) * mp(4, 1) + R(79) * mp(3, 2) - R(44) * mp(2, 3) - mp(1, 4) + R(7) * mp(0, 5)) *
             tp(5) +
         (R(4) * mp(4, 0) - R(17) * mp(3, 1) + R(54) * mp(2, 2) - R(41) * mp(1, 3) + R(10) * mp(0, 4)) * tp(4) -
         R(2) * (R(11) * mp(3, 0) - R(21) * mp(2, 1) + R(5) * mp(0, 3)) * tp(3) -
         t * (R(22) * mp(4, 0) - R(68) * mp(3, 1) + R(78) * mp(2, 2) - R(47) * mp(1, 3) + R(10) * mp(0, 4)) -
         (m - R(2) * n) * (R(4) * mp(2, 0) - R(7) * mp(1, 1) + R(4) * mp(0, 2));
  return c;
}

// ---------------------------------------------------------------------------
// Family 2: Q = x^2+y^2+z^2+xy+yz+zx, C the matching cubic.

template <class R>
R family2_f1(const R& u, const R& v, const R& w) {
  return (R(3) * u * u - R(2) * u * v - R(2) * u * w - v * v + R(2) * v * w - w * w) *
         (u * u * u + u * v * v - R(2) * u * v * w + u * w * w - R(2) * v * v * v + R(2) * v * v * w +
          R(2) * v * w * w - R(2) * w * w * w);
}

template <class R>
R family2_f2(const R& u, const R& v, const R& w) {
  return -R(2) * (v - w) * (u + v - w) * (u - v - w) * (u - v + w) * (u * v + u * w - v * v - v * w - w * w);
}

template <class R>
R family2_f3(const R& u, const R& v, const R& w) {
  auto mon = [&](unsigned a, unsigned b, unsigned c) { return ipow(u, a) * ipow(v, b) * ipow(w, c); };
  return mon(6, 0, 0) - R(2) * mon(5, 1, 0) - R(2) * mon(5, 0, 1) + R(2) * mon(4, 2, 0) + R(2) * mon(4, 0, 2) -
         R(2) * mon(3, 3, 0) + R(2) * mon(3, 2, 1) + R(2) * mon(3, 1, 2) - R(2) * mon(3, 0, 3) +
         R(2) * mon(2, 4, 0) + R(2) * mon(2, 3, 1) - R(8) * mon(2, 2, 2) + R(2) * mon(2, 1, 3) +
         R(2) * mon(2, 0, 4) - R(2) * mon(1, 5, 0) + R(2) * mon(1, 3, 2) + R(2) * mon(1, 2, 3) -
         R(2) * mon(1, 0, 5) + mon(0, 6, 0) - R(2) * mon(0, 5, 1) + R(2) * mon(0, 4, 2) - R(2) * mon(0, 3, 3) +
         R(2) * mon(0, 2, 4) - R(2) * mon(0, 1, 5) + mon(0, 0, 6);
}

template <class R>
PairForms<R> family2_pair_forms(const R& p, const R& q, const R& r, const R& m) {
  const R f3 = family2_f3(p, q, r);
  const R a1 = family2_f1(p, q, r), a2 = family2_f2(p, q, r);
  const R b1 = family2_f1(q, r, p), b2 = family2_f2(q, r, p);
  const R c1 = family2_f1(r, p, q), c2 = family2_f2(r, p, q);
  const R m2 = m * m;
  PairForms<R> f;
  f.alpha1 = a1 * m2 + a2 * m + p * f3;
  f.beta1 = b1 * m2 + b2 * m + q * f3;
  f.gamma1 = c1 * m2 + c2 * m + r * f3;
  f.alpha2 = a1 * m2 - a2 * m + p * f3;
  f.beta2 = b1 * m2 - b2 * m + q * f3;
  f.gamma2 = c1 * m2 - c2 * m + r * f3;
  return f;
}

template <class R>
Quotient<R> family2_h(const R& p, const R& q, const R& r) {
  return {p * p + q * q - r * r, p * p + p * q - p * r + q * q - q * r};
}

template <class R>
Quotient<R> family2_gamma3(const R& p, const R& q, const R& r, const R& m) {
  auto mon = [&](unsigned a, unsigned b, unsigned c) { return ipow(p, a) * ipow(q, b) * ipow(r, c); };
  const R cm2 = R(3) * mon(7, 0, 0) - R(2) * mon(6, 1, 0) - R(2) * mon(6, 0, 1) + R(4) * mon(5, 2, 0) -
                R(4) * mon(5, 1, 1) - R(5) * mon(4, 3, 0) + R(2) * mon(4, 2, 1) + R(6) * mon(4, 1, 2) -
                R(3) * mon(4, 0, 3) - R(5) * mon(3, 4, 0) + R(8) * mon(3, 3, 1) - R(6) * mon(3, 2, 2) +
                R(8) * mon(3, 1, 3) - R(5) * mon(3, 0, 4) + R(4) * mon(2, 5, 0) + R(2) * mon(2, 4, 1) -
                R(6) * mon(2, 3, 2) - R(10) * mon(2, 2, 3) + R(10) * mon(2, 1, 4) - R(2) * mon(1, 6, 0) -
                R(4) * mon(1, 5, 1) + R(6) * mon(1, 4, 2) + R(8) * mon(1, 3, 3) + R(10) * mon(1, 2, 4) -
                R(36) * mon(1, 1, 5) + R(18) * mon(1, 0, 6) + R(3) * mon(0, 7, 0) - R(2) * mon(0, 6, 1) -
                R(3) * mon(0, 4, 3) - R(5) * mon(0, 3, 4) + R(18) * mon(0, 1, 6) - R(11) * mon(0, 0, 7);
  const R hden = family2_h(p, q, r).den;
  const R num = hden * (cm2 * m * m + (ipow(p, 3) + ipow(q, 3) - ipow(r, 3)) * family2_f3(p, q, r));
  const R den = mon(4, 0, 0) + mon(3, 1, 0) - mon(3, 0, 1) + R(3) * mon(2, 2, 0) - R(3) * mon(2, 1, 1) +
                mon(1, 3, 0) - R(3) * mon(1, 2, 1) + R(3) * mon(1, 1, 2) - mon(1, 0, 3) + mon(0, 4, 0) -
                mon(0, 3, 1) - mon(0, 1, 3) + mon(0, 0, 4);
  return {num, den};
}

}  // namespace sextic::forms
