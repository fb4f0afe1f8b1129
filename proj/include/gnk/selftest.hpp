// The end-to-end checks run by `gnk selftest` and by the acceptance binary.
// Each check is randomized from a seed and deterministic given it.

#ifndef GNK_SELFTEST_HPP_
#define GNK_SELFTEST_HPP_

#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace gnk {

  struct CriterionResult {
    int         id;
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct SelftestOptions {
    // quick shrinks sample sizes and search bounds to a few seconds in total
    bool          quick = false;
    std::uint64_t seed  = 1;
  };

  inline constexpr int kNumCriteria = 9;

  CriterionResult run_criterion(int id, SelftestOptions const& opts);

  std::vector<CriterionResult> run_selftest(SelftestOptions const& opts);

  // "PASS  3 name: detail"
  std::string format_result(CriterionResult const& r);

}  // namespace gnk

#endif  // GNK_SELFTEST_HPP_
