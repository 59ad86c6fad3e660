#pragma once

#include <cstdint>
#include <vector>

#include "phylodist/numbers.hpp"

namespace phylodist {

/// Exact distribution of the distance between leaves 1 and 2 over all fully
/// resolved unrooted trees with n labeled leaves: the counts c_1..c_{n-1},
/// where c_i is the number of trees realizing distance i.
class DistanceDistribution {
 public:
  DistanceDistribution(std::int64_t leaf_count, std::vector<BigCount> counts);

  std::int64_t leaf_count() const { return leaf_count_; }

  /// c_i for 1 <= i <= n-1.
  const BigCount& count(std::int64_t i) const;

  /// Sum of c_1..c_k for 1 <= k <= n-1.
  BigCount cumulative(std::int64_t k) const;

  /// Sum of all counts; equals (2n-5)!! when the counts are consistent.
  BigCount total() const;

  /// Counts in distance order, element j holding c_{j+1}.
  const std::vector<BigCount>& counts() const { return counts_; }

 private:
  std::int64_t leaf_count_;
  std::vector<BigCount> counts_;
};

/// Exact first and second moments plus the median, bundled per n.
struct SummaryStats {
  std::int64_t n = 0;
  BigRatio mean;
  BigRatio variance;
  std::int64_t median = 0;
};

}  // namespace phylodist
