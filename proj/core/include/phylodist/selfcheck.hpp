#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phylodist/numbers.hpp"
#include "phylodist/trees.hpp"

namespace phylodist::selfcheck {

/// Outcome of one verification family; counterexample is empty on success
/// and otherwise pins the first failing instance.
struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::string counterexample;
};

struct VerifyOptions {
  std::int64_t max_n_enum = 9;
  std::int64_t max_n_formula = 200;
  std::int64_t max_n_series = 100;
  std::int64_t enum_bound = kDefaultEnumMax;
  int threads = 1;
};

/// Sweeps two count-valued functions of (n, i) over i in [1, n-1] and
/// reports the first disagreement, smallest n first.
template <typename Lhs, typename Rhs>
std::optional<std::string> first_count_mismatch(std::int64_t n_lo, std::int64_t n_hi,
                                                Lhs&& lhs, Rhs&& rhs) {
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t i = 1; i <= n - 1; ++i) {
      const BigCount a = lhs(n, i);
      const BigCount b = rhs(n, i);
      if (!(a == b)) {
        return "n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": " +
               a.to_string() + " vs " + b.to_string();
      }
    }
  }
  return std::nullopt;
}

/// Closed-form counts against the brute-force enumeration oracle.
CheckResult check_enumeration_vs_formula(const VerifyOptions& options);

/// Cumulative closed form against literal partial sums, all k including
/// the k = n-1 boundary.
CheckResult check_cumulative_equivalence(std::int64_t max_n);

/// Generating-function coefficients against the closed-form counts.
CheckResult check_series_vs_formula(std::int64_t max_n);

/// Symbolic certificate identity, its concrete instances, and the printed
/// term ratio over the sweep range.
CheckResult check_certificate(std::int64_t max_n_ratio = 50);

/// Telescoped closed form of S_k against direct summation, the S_2
/// boundary value, and the reassembly of the cumulative fraction.
CheckResult check_telescoping(std::int64_t max_n);

/// Every family with the given bounds, in reporting order.
std::vector<CheckResult> run_all(const VerifyOptions& options);

}  // namespace phylodist::selfcheck
