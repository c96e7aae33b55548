#pragma once

// Verification suites: each runs a family of exact checks and reports every
// check with a pass flag and a short detail line.

#include <optional>
#include <string>
#include <vector>

#include "ywall/adjoint.hpp"
#include "ywall/serialize.hpp"

namespace ywall {

struct SuiteParams {
  std::optional<int> level;      // restricts level-indexed suites to one level
  std::optional<Lambda> lambda;  // restricts lambda-indexed suites to one weight
  std::optional<int> depth;      // suite default when unset
  std::optional<int> window;     // grade window for H-constancy
  std::size_t node_cap = 1'000'000;
  unsigned jobs = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  Json data = Json::object();

  bool passed() const;
};

const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name or out-of-range parameters;
// ResourceLimitError when a component exceeds the node cap.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

Json to_json(const SuiteReport& report);

// Default weights of the lambda-indexed suites: every dominant weight of
// level 1..3 and 2 Lambda_0 + Lambda_1.
std::vector<Lambda> default_lambdas();

}  // namespace ywall
