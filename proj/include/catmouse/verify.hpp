#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace catmouse {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  long long checks = 0;  // individual assertions evaluated
  std::string detail;    // summary, or the first failure
  double seconds = 0.0;
};

// Progress sink for long suites; may be empty.
using VerifyLog = std::function<void(const std::string&)>;

// The eight acceptance bundles.
CriterionResult verify_oracle_equivalence(const VerifyLog& log = {});   // 1
CriterionResult verify_fat_bound(const VerifyLog& log = {});            // 2
CriterionResult verify_thin_bound(const VerifyLog& log = {});           // 3
CriterionResult verify_sqrt_localization(const VerifyLog& log = {});    // 4
CriterionResult verify_thin_localization(const VerifyLog& log = {});    // 5
CriterionResult verify_spider_lower_bound(const VerifyLog& log = {});   // 6
CriterionResult verify_minimax_consistency(const VerifyLog& log = {});  // 7
CriterionResult verify_structure(const VerifyLog& log = {});            // 8

// Suite names: oracle (1), fat (2), thin (3, 5), sqrt (4), lower (6),
// minimax (7), structure (8), all. Unknown names throw InputError; failed
// checks are reported, not thrown.
std::vector<CriterionResult> verify_suite(std::string_view name, const VerifyLog& log = {});
std::vector<std::string> verify_suite_names();

// "PASS  [1] title: detail (1.23 s)"
std::string verdict_line(const CriterionResult& r);
std::string verdicts_json(const std::vector<CriterionResult>& results);

}  // namespace catmouse
