#include "phylodist/distribution.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace phylodist {

DistanceDistribution::DistanceDistribution(std::int64_t leaf_count,
                                           std::vector<BigCount> counts)
    : leaf_count_(leaf_count), counts_(std::move(counts)) {
  if (leaf_count_ < 3) {
    throw std::domain_error("distance distribution needs n >= 3, got " +
                            std::to_string(leaf_count_));
  }
  if (counts_.size() != static_cast<std::size_t>(leaf_count_ - 1)) {
    throw std::domain_error("distance distribution for n=" +
                            std::to_string(leaf_count_) + " needs n-1 counts");
  }
}

const BigCount& DistanceDistribution::count(std::int64_t i) const {
  if (i < 1 || i > leaf_count_ - 1) {
    throw std::domain_error("distance must lie in [1, n-1], got " +
                            std::to_string(i));
  }
  return counts_[static_cast<std::size_t>(i - 1)];
}

BigCount DistanceDistribution::cumulative(std::int64_t k) const {
  if (k < 1 || k > leaf_count_ - 1) {
    throw std::domain_error("cumulative index must lie in [1, n-1], got " +
                            std::to_string(k));
  }
  BigCount sum;
  for (std::int64_t i = 1; i <= k; ++i) {
    sum += counts_[static_cast<std::size_t>(i - 1)];
  }
  return sum;
}

BigCount DistanceDistribution::total() const {
  BigCount sum;
  for (const BigCount& c : counts_) {
    sum += c;
  }
  return sum;
}

}  // namespace phylodist
