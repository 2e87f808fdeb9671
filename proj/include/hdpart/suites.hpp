#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hdpart/enumerator.hpp"

namespace hdpart {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Internal consistency of the embedded golden tables; no enumeration.
std::vector<CheckResult> golden_consistency_checks();
// Exact round trips of every transform pair and transform-path comparisons.
std::vector<CheckResult> transform_checks();
// Desk-scale enumeration against the golden tables.
std::vector<CheckResult> enumeration_checks(const EnumOptions& opts = {});

// suite is one of "tables", "transforms", "enumeration", "all".
// Throws std::invalid_argument for other names.
std::vector<CheckResult> run_suite(std::string_view suite, const EnumOptions& opts = {});

}  // namespace hdpart
