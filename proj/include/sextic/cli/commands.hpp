#pragma once

// The `sextic` subcommands. Each returns a finished RunReport; exceptions
// from the library are mapped to exit codes (1 invalid input, 2 degenerate,
// 3 factoring budget exceeded).

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sextic/cli/expected.hpp"
#include "sextic/cli/report.hpp"
#include "sextic/factor.hpp"

namespace sextic::cli {

/// Seed of the random (m, n, p, q) points in the family-1 pair check.
inline constexpr unsigned long kFamily1PairSeed = 20260;

/// SEXTIC_PRECISION if set and valid, else 256.
long default_precision();

/// Factoring effort for the third curve, whose constant has a 41-digit
/// cofactor with a 19-digit prime factor beyond the default ECM settings.
FactorBudget extended_budget();

RunReport cmd_verify_identities(bool skip_maps, bool corrupt_phi);

/// family 1: {m, n}; family 2: {p, r, m}.
RunReport cmd_gen_chain(int family, const std::vector<std::string>& params);

RunReport cmd_chain_points(const std::string& chain_file);

struct RegulatorOptions {
  std::string curve_file;
  std::string points_file;
  long precision = 256;
  std::vector<std::size_t> subset;  // 1-based; empty means all points
  HeightNormalization normalization = HeightNormalization::kLimitX;
  FactorBudget budget;
};
RunReport cmd_regulator(const RegulatorOptions& opts);

struct SearchOptions {
  std::string coefficients;  // "a4,a3,a2,a1,a0"
  long height = 0;
  unsigned shards = 1;
  std::function<void(const std::string&)> progress;
};
RunReport cmd_search_quartic(const SearchOptions& opts);

struct ReproduceOptions {
  bool full = false;
  std::string expected_file;  // empty: the shipped table
  long precision = 256;
  unsigned shards = 1;
  FactorBudget third_curve_budget = extended_budget();
  std::function<void(const std::string&)> progress;
};
RunReport cmd_reproduce(const ReproduceOptions& opts);

/// Parses argv, runs one subcommand, prints JSON (or --pretty text) to out,
/// elapsed time and progress to err. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sextic::cli
