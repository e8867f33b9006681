#include "sextic/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace sextic {

namespace {

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

BigInt mod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt random_below(std::mt19937_64& rng, const BigInt& n) {
  // Enough random limbs to make the bias irrelevant for seeding.
  BigInt r = 0;
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
  for (size_t b = 0; b < bits; b += 64) {
    r <<= 64;
    r += BigInt(std::to_string(rng()));
  }
  return mod(r, n);
}

/// If n = r^e with e >= 2, returns (r, e) with e maximal; otherwise (n, 1).
std::pair<BigInt, unsigned> perfect_power(const BigInt& n) {
  if (n < 4 || !mpz_perfect_power_p(n.get_mpz_t())) return {n, 1};
  const unsigned long max_e = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = max_e; e >= 2; --e) {
    BigInt r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0) return {r, static_cast<unsigned>(e)};
  }
  return {n, 1};
}

// Montgomery-form curve arithmetic on X:Z coordinates modulo n.
struct MontPoint {
  BigInt x, z;
};

struct MontCurve {
  const BigInt& n;
  BigInt a24;  // (A + 2) / 4

  MontPoint dbl(const MontPoint& p) const {
    BigInt s = mod((p.x + p.z) * (p.x + p.z), n);
    BigInt d = mod((p.x - p.z) * (p.x - p.z), n);
    BigInt t = s - d;
    return {mod(s * d, n), mod(t * (d + a24 * t), n)};
  }

  MontPoint add(const MontPoint& p, const MontPoint& q, const MontPoint& diff) const {
    BigInt u = mod((p.x - p.z) * (q.x + q.z), n);
    BigInt v = mod((p.x + p.z) * (q.x - q.z), n);
    BigInt s = u + v;
    BigInt d = u - v;
    return {mod(diff.z * mod(s * s, n), n), mod(diff.x * mod(d * d, n), n)};
  }

  MontPoint mul(const MontPoint& p, const BigInt& k) const {
    if (k == 0) return {1, 0};
    if (k == 1) return p;
    MontPoint r0 = p;
    MontPoint r1 = dbl(p);
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
      if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }
};

BigInt proper_factor_or_zero(const BigInt& g, const BigInt& n) {
  if (g > 1 && g < n) return g;
  return 0;
}

}  // namespace

BigInt Factorization::product() const {
  BigInt p = sign;
  for (const auto& f : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    p *= pe;
  }
  return p * cofactor;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

bool is_probable_prime(const BigInt& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace detail {

BigInt pollard_brent(const BigInt& n, unsigned long iterations, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(seed);
  constexpr unsigned long kBatch = 128;
  unsigned long spent = 0;
  while (spent < iterations) {
    const BigInt c = random_below(rng, n - 3) + 1;
    BigInt y = random_below(rng, n);
    BigInt x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) { return mod(v * v + c, n); };
    while (g == 1 && spent < iterations) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long m = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < m; ++i) {
          y = f(y);
          q = mod(q * (x - y), n);
        }
        g = gcd(q, n);
        k += m;
        spent += m;
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot; replay one step at a time
      do {
        ys = f(ys);
        g = gcd(x - ys, n);
      } while (g == 1);
    }
    if (BigInt d = proper_factor_or_zero(g, n); d != 0) return d;
  }
  return 0;
}

BigInt ecm_find_factor(const BigInt& n, unsigned curves, unsigned long b1, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  const unsigned long b2 = 100 * b1;
  static const auto small_primes = primes_up_to(1ul << 20);
  const auto primes_to = [&](unsigned long bound) {
    if (bound <= small_primes.back()) return small_primes;
    return primes_up_to(bound);
  }(b2);

  std::mt19937_64 rng(seed ^ 0xec3ULL);
  for (unsigned c = 0; c < curves; ++c) {
    // Suyama parametrization.
    const BigInt sigma = random_below(rng, n - 7) + 6;
    const BigInt u = mod(sigma * sigma - 5, n);
    const BigInt v = mod(4 * sigma, n);
    const BigInt u3 = mod(u * u * u, n);
    const BigInt vmu = v - u;
    const BigInt num = mod(vmu * vmu * vmu * (3 * u + v), n);
    const BigInt den = mod(16 * u3 * v, n);
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
      if (BigInt d = proper_factor_or_zero(gcd(den, n), n); d != 0) return d;
      continue;
    }
    MontCurve curve{n, mod(num * inv, n)};
    MontPoint p{u3, mod(v * v * v, n)};

    for (unsigned long q : primes_to) {
      if (q > b1) break;
      unsigned long qe = q;
      while (qe <= b1 / q) qe *= q;
      p = curve.mul(p, BigInt(std::to_string(qe)));
    }
    BigInt g = gcd(p.z, n);
    if (BigInt d = proper_factor_or_zero(g, n); d != 0) return d;
    if (g == n) continue;

    // Stage 2: baby steps j*P for odd j < w/2, giant steps (i*w)*P.
    constexpr unsigned long w = 2310;
    std::vector<MontPoint> baby(w / 2 + 1);
    const MontPoint p2 = curve.dbl(p);
    baby[1] = p;
    baby[3] = curve.add(p2, p, p);
    for (unsigned long j = 5; j <= w / 2; j += 2) baby[j] = curve.add(baby[j - 2], p2, baby[j - 4]);
    const MontPoint step = curve.mul(p, BigInt(std::to_string(w)));
    unsigned long i0 = b1 / w;
    MontPoint prev = curve.mul(p, BigInt(std::to_string(i0 > 0 ? (i0 - 1) * w : 0)));
    MontPoint giant = curve.mul(p, BigInt(std::to_string(i0 * w)));
    if (i0 == 0) {
      // (-1)*w*P and w*P share x; the xADD difference only needs x:z
      prev = step;
    }
    BigInt acc = 1;
    auto it = std::upper_bound(primes_to.begin(), primes_to.end(), b1);
    for (unsigned long i = i0;; ++i) {
      const unsigned long centre = i * w;
      const unsigned long lo = centre > w / 2 ? centre - w / 2 : 0;
      if (lo > b2) break;
      while (it != primes_to.end() && *it <= centre + w / 2 && *it <= b2) {
        const unsigned long q = *it++;
        const unsigned long j = q > centre ? q - centre : centre - q;
        if (j % 2 == 0 || j > w / 2) continue;
        acc = mod(acc * (giant.x * baby[j].z - baby[j].x * giant.z), n);
      }
      MontPoint next = curve.add(giant, step, prev);
      prev = giant;
      giant = next;
      if (it == primes_to.end() || *it > b2) break;
    }
    g = gcd(acc, n);
    if (BigInt d = proper_factor_or_zero(g, n); d != 0) return d;
  }
  return 0;
}

}  // namespace detail

Factorization factor(const BigInt& n, const FactorBudget& budget) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  BigInt m = ::abs(n);
  std::map<BigInt, unsigned> found;

  static const auto trial_primes = primes_up_to(1ul << 20);
  for (unsigned long p : trial_primes) {
    if (p > budget.trial_bound) break;
    if (BigInt(p) * BigInt(p) > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }

  BigInt unfactored = 1;
  std::vector<std::pair<BigInt, unsigned>> stack;
  if (m > 1) stack.emplace_back(m, 1);
  std::uint64_t salt = budget.seed;
  while (!stack.empty()) {
    auto [c, mult] = stack.back();
    stack.pop_back();
    if (c == 1) continue;
    if (is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    if (auto [root, e] = perfect_power(c); e > 1) {
      stack.emplace_back(root, mult * e);
      continue;
    }
    BigInt d = detail::pollard_brent(c, budget.rho_iterations, salt++);
    if (d == 0 && budget.ecm_curves > 0) d = detail::ecm_find_factor(c, budget.ecm_curves, budget.ecm_b1, salt++);
    if (d == 0) {
      BigInt ce;
      mpz_pow_ui(ce.get_mpz_t(), c.get_mpz_t(), mult);
      unfactored *= ce;
      continue;
    }
    // Split off all copies of gcd-related parts so repeated primes collapse.
    BigInt rest = c / d;
    const BigInt g = gcd(d, rest);
    if (g > 1) {
      stack.emplace_back(g, mult);
      stack.emplace_back(d / g, mult);
      stack.emplace_back(rest, mult);
    } else {
      stack.emplace_back(d, mult);
      stack.emplace_back(rest, mult);
    }
  }

  for (const auto& [p, e] : found) out.factors.push_back({p, e});
  out.cofactor = unfactored;
  out.complete = unfactored == 1;
  return out;
}

}  // namespace sextic
