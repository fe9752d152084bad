#pragma once

#include <functional>
#include <string>
#include <vector>

namespace slicefn {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  // Extra lines that do not affect the verdict.
  std::vector<std::string> notes;
};

struct BatteryConfig {
  unsigned seed = 0;
};

CriterionResult check_representation(const BatteryConfig& cfg = {});
CriterionResult check_slice_product(const BatteryConfig& cfg = {});
CriterionResult check_reciprocal(const BatteryConfig& cfg = {});
CriterionResult check_zero_trichotomy(const BatteryConfig& cfg = {});
CriterionResult check_identity_principle(const BatteryConfig& cfg = {});
CriterionResult check_modulus_fixtures(const BatteryConfig& cfg = {});
CriterionResult check_open_mapping(const BatteryConfig& cfg = {});
CriterionResult check_expansion_identity(const BatteryConfig& cfg = {});
CriterionResult check_calculus(const BatteryConfig& cfg = {});

// Criteria 1-9 in order; `progress` is called after each one.
std::vector<CriterionResult> run_battery(
    const BatteryConfig& cfg = {},
    const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& r);

}  // namespace slicefn
