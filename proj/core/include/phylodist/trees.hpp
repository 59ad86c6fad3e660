#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phylodist/distribution.hpp"
#include "phylodist/numbers.hpp"

namespace phylodist {

/// Fully resolved unrooted tree with n labeled leaves. Nodes are indexed
/// 0..2n-3 with leaves first (node v < n carries label v+1); internal
/// nodes have degree exactly 3, leaves degree 1. Edges keep their creation
/// order, which makes the leaf-insertion decoding canonical.
class PhyloTree {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::int64_t leaf_count() const { return leaf_count_; }
  int node_count() const { return static_cast<int>(2 * leaf_count_ - 2); }
  bool is_leaf(int node) const { return node < leaf_count_; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int node) const;
  int degree(int node) const { return is_leaf(node) ? 1 : 3; }

 private:
  std::int64_t leaf_count_ = 0;
  std::vector<Edge> edges_;          // 2n-3 entries, creation order
  std::vector<int> neighbor_slots_;  // 3 slots per node, unused filled with -1

  friend class TreeBuilder;
};

/// Sequence of edge choices (e_4, ..., e_n) with 1 <= e_k <= 2k-5; decoding
/// distinct codes yields distinct labeled trees, and the code space has
/// size (2n-5)!!.
struct InsertionCode {
  std::vector<int> choices;
};

/// Incremental decoder; reusable across codes to keep enumeration cheap.
class TreeBuilder {
 public:
  /// Rebuilds the tree for the given code: starts from the unique 3-leaf
  /// tree and, for k = 4..n, subdivides the edge with index e_k - 1 in
  /// creation order to attach leaf k.
  const PhyloTree& decode(std::int64_t n, std::span<const int> choices);

 private:
  PhyloTree tree_;
};

/// One-shot decode. Throws std::domain_error on a malformed code.
PhyloTree decode(std::int64_t n, const InsertionCode& code);

/// Refusal bound for exhaustive enumeration; (2n-5)!! trees at n = 10 is
/// 2,027,025, the default desk-scale limit.
inline constexpr std::int64_t kDefaultEnumMax = 10;

namespace detail {
void check_enumerable(std::int64_t n, std::int64_t n_max);
std::vector<int> first_code(std::int64_t n, std::span<const int> prefix);
bool advance_code(std::vector<int>& choices, std::size_t fixed_prefix);
}  // namespace detail

/// Visits every tree whose insertion code starts with the given prefix
/// (in code order) and returns the number visited. An empty prefix visits
/// all of T_n. The visitor receives a reference valid only for the call.
template <typename Visitor>
BigCount enumerate_prefix(std::int64_t n, std::span<const int> prefix,
                          Visitor&& visit, std::int64_t n_max = kDefaultEnumMax) {
  detail::check_enumerable(n, n_max);
  std::vector<int> choices = detail::first_code(n, prefix);
  TreeBuilder builder;
  std::uint64_t visited = 0;
  do {
    visit(builder.decode(n, choices));
    ++visited;
  } while (detail::advance_code(choices, prefix.size()));
  return BigCount(visited);
}

/// Visits every tree in T_n exactly once; returns (2n-5)!!. Refuses
/// n > n_max to guard against accidental combinatorial explosion.
template <typename Visitor>
BigCount enumerate(std::int64_t n, Visitor&& visit,
                   std::int64_t n_max = kDefaultEnumMax) {
  return enumerate_prefix(n, std::span<const int>{}, std::forward<Visitor>(visit),
                          n_max);
}

/// Uniform draw from T_n: each insertion choice e_k is uniform on
/// [1, 2k-5], taken from a splitmix64 stream so that a seed pins the tree
/// bit-for-bit across platforms.
PhyloTree sample_uniform(std::int64_t n, std::uint64_t seed);

/// Number of edges on the unique path between the leaves labeled k and l.
std::int64_t leaf_distance(const PhyloTree& tree, std::int64_t k, std::int64_t l);

/// Exact counts of d_T(1,2) over a full enumeration of T_n; the
/// brute-force oracle for the closed-form counts. Partitions the code
/// space across threads when threads > 1 (counts are merged, so results
/// are identical either way).
DistanceDistribution empirical_distribution(std::int64_t n,
                                            std::int64_t n_max = kDefaultEnumMax,
                                            int threads = 1);

/// Histogram of d(1,2) over independent uniform samples; element j counts
/// distance j+1. Reproducible for a fixed seed, with or without the
/// optional per-sample tap.
std::vector<std::uint64_t> monte_carlo_distribution(
    std::int64_t n, std::int64_t samples, std::uint64_t seed,
    const std::function<void(const PhyloTree&)>& on_sample = {});

/// Sup-distance between the histogram's empirical CDF and the exact CDF
/// of the distribution (Kolmogorov distance).
double kolmogorov_distance(const std::vector<std::uint64_t>& histogram,
                           const DistanceDistribution& exact);

/// Split signature: for every internal edge, the leaf set on the side not
/// containing leaf 1, as a bitmask (bit j = leaf j+1), sorted. Equal
/// labeled trees have equal signatures. Requires n <= 64.
std::vector<std::uint64_t> canonical_splits(const PhyloTree& tree);

/// Newick rendering with leaves as labels 1..n and no branch lengths,
/// rooted for output at the internal node adjacent to leaf 1.
std::string to_newick(const PhyloTree& tree);

/// Deterministic splittable generator (splitmix64); the artifact pins the
/// algorithm so histograms reproduce bit-for-bit across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform value in [0, bound) via rejection, exactly unbiased.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace phylodist
