#include "sextic/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace sextic::cli {

Check& RunReport::add_check(Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.mandatory; });
}

void RunReport::finalize() {
  if (exit_code == kOk && !passed()) exit_code = kCheckFailed;
}

Json RunReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back(Json{{"name", c.name},
                      {"group", c.group},
                      {"status", c.pass ? "pass" : "fail"},
                      {"mandatory", c.mandatory},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance}});
  Json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", cs}};
  j["status"] = exit_code == kOk ? "ok" : "failed";
  j["exit_code"] = exit_code;
  if (!error.empty()) j["error"] = error;
  return j;
}

namespace {

std::string clip(const std::string& s, std::size_t n = 100) {
  return s.size() <= n ? s : s.substr(0, n - 3) + "...";
}

}  // namespace

std::string RunReport::pretty() const {
  std::ostringstream os;
  os << command << ": " << (exit_code == kOk ? "ok" : "FAILED") << " (exit " << exit_code << ")\n";
  if (!error.empty()) os << "  error: " << error << "\n";

  std::vector<std::string> groups;
  for (const auto& c : checks)
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end()) groups.push_back(c.group);
  for (const auto& g : groups) {
    os << "\n[" << (g.empty() ? "checks" : g) << "]\n";
    for (const auto& c : checks) {
      if (c.group != g) continue;
      os << "  " << (c.pass ? "PASS" : (c.mandatory ? "FAIL" : "fail")) << "  " << c.name;
      if (!c.mandatory) os << " (optional)";
      os << "\n";
      if (!c.pass || !c.mandatory || c.tolerance != "exact") {
        os << "        expected  " << clip(c.expected) << "\n";
        os << "        actual    " << clip(c.actual) << "\n";
        if (c.tolerance != "exact") os << "        tolerance " << c.tolerance << "\n";
      }
    }
  }
  if (!results.empty()) os << "\nresults:\n" << results.dump(2) << "\n";
  return os.str();
}

}  // namespace sextic::cli
