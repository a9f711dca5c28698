#pragma once

#include <string>
#include <vector>

namespace gh {

// One line of a verification report: "CHECK <name> PASS|FAIL <detail>".
struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace gh
