#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "profile.hpp"

namespace ineqlab::cli {

// What a check measured: a nonnegative error to compare against its tolerance.
struct Measure {
  double error = 0.0;
  std::string detail;
};

struct SelfTestCheck {
  std::string anchor;
  std::string description;
  double tol = 0.0;
  std::function<Measure()> run;
};

struct CheckResult {
  std::string anchor;
  std::string description;
  double error = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string detail;
};

const std::vector<SelfTestCheck>& selftest_registry();

// Runs every check whose anchor equals `only` (all when empty). A check that
// throws fails with the exception text as detail.
std::vector<CheckResult> run_selftest(const Profile& profile, std::string_view only = {});

}  // namespace ineqlab::cli
