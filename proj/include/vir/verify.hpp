#pragma once

#include "vir/verma.hpp"

#include <string>
#include <vector>

namespace vir {

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool checks_passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  double max_residual = -1;  // negative when the suite is exact
  std::string summary;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool passed() const { return checks_passed && seconds < limit_seconds; }
};

struct VerifyOptions {
  GramProvider* gram = nullptr;  // used by the Gram-heavy suites when set
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Throws ErrorKind::Range for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

std::string format_result(const SuiteResult& r);

}  // namespace vir
