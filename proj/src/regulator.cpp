#include "sextic/regulator.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

namespace sextic {

namespace {

struct Gram {
  std::vector<std::vector<BigReal>> value;
  std::vector<std::vector<BigReal>> error;
};

Gram build_gram(const HeightCalculator& hc, const std::vector<CurvePoint>& pts, std::vector<HeightValue>& heights) {
  const std::size_t n = pts.size();
  heights.clear();
  for (const auto& p : pts) heights.push_back(hc.height(p));
  Gram g{std::vector<std::vector<BigReal>>(n, std::vector<BigReal>(n)),
         std::vector<std::vector<BigReal>>(n, std::vector<BigReal>(n))};
  const long wp = heights.empty() ? hc.precision() : heights[0].value.precision();
  const BigReal two = BigReal::from_long(2, wp);
  for (std::size_t i = 0; i < n; ++i) {
    g.value[i][i] = heights[i].value;
    g.error[i][i] = heights[i].error;
    for (std::size_t j = i + 1; j < n; ++j) {
      const HeightValue s = hc.height(add(hc.curve(), pts[i], pts[j]));
      g.value[i][j] = g.value[j][i] = (s.value - heights[i].value - heights[j].value) / two;
      g.error[i][j] = g.error[j][i] = (s.error + heights[i].error + heights[j].error) / two;
    }
  }
  return g;
}

struct Verdict {
  BigReal det;
  BigReal bound;
  std::vector<double> eig;
  bool nonsingular = false;
};

Verdict assess(const Gram& g, const std::vector<std::size_t>& idx, long wp) {
  const std::size_t n = idx.size();
  Verdict v{BigReal::from_long(1, wp), BigReal::from_long(0, wp), {}, true};
  if (n == 0) return v;

  std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(n));
  BigReal M = BigReal::from_long(0, wp), eps = BigReal::from_long(0, wp);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = g.value[idx[i]][idx[j]];
      M = max(M, abs(a[i][j]));
      eps = max(eps, g.error[idx[i]][idx[j]]);
    }

  // Gaussian elimination with partial pivoting
  BigReal det = BigReal::from_long(1, wp);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    if (a[piv][c].is_zero()) {
      det = BigReal::from_long(0, wp);
      break;
    }
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigReal f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }

  // Leibniz: each of the n! products of n entries moves by at most
  // (M + eps)^n - M^n; elimination rounding is far below that at this precision.
  BigReal fact = BigReal::from_long(1, wp), mn = BigReal::from_long(1, wp), me = BigReal::from_long(1, wp);
  for (std::size_t i = 1; i <= n; ++i) {
    fact *= BigReal::from_long(static_cast<long>(i), wp);
    mn *= M;
    me *= M + eps;
  }
  v.det = det;
  v.bound = fact * (me - mn) + fact * mn * pow2(-(wp - 16), wp);

  Eigen::MatrixXd d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = g.value[idx[i]][idx[j]].to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) v.eig.push_back(es.eigenvalues()[i]);
  const double lo = v.eig.front(), hi = v.eig.back();
  v.nonsingular = abs(det) > v.bound && hi > 0 && lo > kEigenRatio * hi;
  return v;
}

RegulatorReport make_report(const HeightCalculator& hc, const std::vector<CurvePoint>& pts, Gram& g) {
  std::vector<HeightValue> hs;
  g = build_gram(hc, pts, hs);
  const long wp = hs.empty() ? hc.precision() : hs[0].value.precision();
  std::vector<std::size_t> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  const Verdict v = assess(g, all, wp);

  RegulatorReport r;
  r.points = pts;
  for (const auto& h : hs) r.heights.push_back(h.value);
  r.gram = g.value;
  r.determinant = v.det;
  r.error_bound = v.bound;
  r.eigenvalues = v.eig;
  r.independent = v.nonsingular;
  if (r.independent) r.witness_subset = all;
  r.precision = hc.precision();
  r.normalization = hc.normalization();
  return r;
}

long working_precision(const HeightCalculator& hc) { return hc.height(CurvePoint::at_infinity()).value.precision(); }

}  // namespace

RegulatorReport regulator(const HeightCalculator& hc, const std::vector<CurvePoint>& points) {
  Gram g;
  return make_report(hc, points, g);
}

RegulatorReport regulator(const MordellCurve& e, const std::vector<CurvePoint>& points, long precision,
                          HeightNormalization normalization, const FactorBudget& budget) {
  return regulator(HeightCalculator(e, precision, normalization, budget), points);
}

RegulatorReport independence_report(const HeightCalculator& hc, const std::vector<CurvePoint>& points) {
  Gram g;
  RegulatorReport r = make_report(hc, points, g);
  const long wp = working_precision(hc);
  const std::size_t n = points.size();

  std::vector<std::size_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> cand = best;
    cand.push_back(i);
    if (assess(g, cand, wp).nonsingular) best = std::move(cand);
  }
  if (n <= 16) {
    for (std::size_t size = n; size > best.size(); --size) {
      bool found = false;
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
      do {
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) cand.push_back(i);
        if (assess(g, cand, wp).nonsingular) {
          best = std::move(cand);
          found = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
      if (found) break;
    }
  }
  r.witness_subset = best;
  return r;
}

RegulatorReport independence_report(const MordellCurve& e, const std::vector<CurvePoint>& points, long precision,
                                    HeightNormalization normalization, const FactorBudget& budget) {
  return independence_report(HeightCalculator(e, precision, normalization, budget), points);
}

bool torsion_test(const HeightCalculator& hc, const CurvePoint& p) {
  if (p.infinity) return true;
  const HeightValue h = hc.height(p);
  if (abs(h.value) > h.error) return false;
  CurvePoint q = p;
  for (int n = 1; n <= 12; ++n) {
    if (q.infinity) return true;
    q = add(hc.curve(), q, p);
  }
  return false;
}

bool torsion_test(const MordellCurve& e, const CurvePoint& p, long precision) {
  if (p.infinity) return true;
  return torsion_test(HeightCalculator(e, precision), p);
}

std::optional<HeightNormalization> calibrate_normalization(const MordellCurve& e,
                                                           const std::vector<CurvePoint>& points,
                                                           const BigReal& expected, const BigReal& tolerance,
                                                           long precision) {
  const RegulatorReport r = regulator(e, points, precision, HeightNormalization::kLimitX);
  if (abs(r.determinant - expected) <= tolerance) return HeightNormalization::kLimitX;
  BigReal half = r.determinant;
  for (std::size_t i = 0; i < points.size(); ++i) half /= BigReal::from_long(2, half.precision());
  if (abs(half - expected) <= tolerance) return HeightNormalization::kHalf;
  return std::nullopt;
}

}  // namespace sextic
