#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catloc/budget.hpp"

namespace catloc::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Instance counts and the first failure, if any.
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  Budget budget{};
  unsigned workers = 1;
  /// DSL documents checked by the round-trip criterion besides the built-in ones.
  std::vector<std::string> extra_documents;
  /// Called as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriteria = 9;

/// Canonical DSL documents shipped with the suite.
const std::vector<std::string>& builtin_documents();

CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

}  // namespace catloc::suite
