#pragma once

#include <string>
#include <vector>

namespace gqm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // on failure, the first mismatch; on success, a summary
};

// Re-derives every published q-dependent table and bound and compares it to
// the frozen reference data. Stops each check at its first mismatch.
std::vector<CheckResult> verify_all(int q, int threads);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace gqm
