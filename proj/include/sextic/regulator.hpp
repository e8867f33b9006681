#pragma once

// Gram matrices of the height pairing, regulators and independence tests.

#include <cstddef>
#include <optional>
#include <vector>

#include "sextic/heights.hpp"
#include "sextic/mordell.hpp"

namespace sextic {

struct RegulatorReport {
  std::vector<CurvePoint> points;
  std::vector<BigReal> heights;
  std::vector<std::vector<BigReal>> gram;
  BigReal determinant;
  BigReal error_bound;  // |determinant - true regulator| <= error_bound
  std::vector<double> eigenvalues;  // ascending
  bool independent = false;
  /// 0-based indices of a largest subset with nonsingular Gram matrix
  /// (independence_report only; regulator() fills in all indices when
  /// independent).
  std::vector<std::size_t> witness_subset;
  long precision = 0;
  HeightNormalization normalization = HeightNormalization::kLimitX;
};

/// Nonsingular: |det| above its error bound and the smallest eigenvalue
/// above 1e-6 times the largest.
inline constexpr double kEigenRatio = 1e-6;

RegulatorReport regulator(const MordellCurve& e, const std::vector<CurvePoint>& points, long precision,
                          HeightNormalization normalization = HeightNormalization::kLimitX,
                          const FactorBudget& budget = {});
RegulatorReport regulator(const HeightCalculator& hc, const std::vector<CurvePoint>& points);

/// Greedy pass, then exhaustive search over larger subsets (up to 16
/// points), for the largest subset with nonsingular Gram matrix.
RegulatorReport independence_report(const MordellCurve& e, const std::vector<CurvePoint>& points, long precision,
                                    HeightNormalization normalization = HeightNormalization::kLimitX,
                                    const FactorBudget& budget = {});
RegulatorReport independence_report(const HeightCalculator& hc, const std::vector<CurvePoint>& points);

/// Height below its error bound and nP = O for some 1 <= n <= 12.
bool torsion_test(const MordellCurve& e, const CurvePoint& p, long precision);
bool torsion_test(const HeightCalculator& hc, const CurvePoint& p);

/// The convention under which the regulator of `points` lies within
/// `tolerance` of `expected`, if either does.
std::optional<HeightNormalization> calibrate_normalization(const MordellCurve& e,
                                                           const std::vector<CurvePoint>& points,
                                                           const BigReal& expected, const BigReal& tolerance,
                                                           long precision);

}  // namespace sextic
