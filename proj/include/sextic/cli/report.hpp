#pragma once

// The uniform result of every CLI command.

#include <string>
#include <vector>

#include "sextic/cli/serialize.hpp"

namespace sextic::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kDegenerate = 2, kBudgetExceeded = 3 };

struct Check {
  std::string name;
  std::string group;  // report section, e.g. "identities" or "regulators"
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string tolerance = "exact";
  bool mandatory = true;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  double elapsed_seconds = 0;
  int exit_code = kOk;
  std::string error;  // set when the command stopped early

  Check& add_check(Check c);
  /// Conjunction over the mandatory checks.
  bool passed() const;
  /// Sets exit_code to kCheckFailed if a mandatory check failed and no other
  /// code was set.
  void finalize();

  /// Everything except elapsed time, so repeated runs print identical bytes.
  Json to_json() const;
  std::string pretty() const;
};

}  // namespace sextic::cli
