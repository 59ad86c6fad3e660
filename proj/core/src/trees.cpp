#include "phylodist/trees.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace phylodist {

std::span<const int> PhyloTree::neighbors(int node) const {
  if (node < 0 || node >= node_count()) {
    throw std::domain_error("node index out of range: " + std::to_string(node));
  }
  return {neighbor_slots_.data() + 3 * static_cast<std::size_t>(node),
          static_cast<std::size_t>(degree(node))};
}

namespace {

void replace_neighbor(std::vector<int>& slots, int node, int from, int to) {
  const std::size_t base = 3 * static_cast<std::size_t>(node);
  for (std::size_t s = 0; s < 3; ++s) {
    if (slots[base + s] == from) {
      slots[base + s] = to;
      return;
    }
  }
  throw std::logic_error("adjacency update lost an edge endpoint");
}

}  // namespace

const PhyloTree& TreeBuilder::decode(std::int64_t n, std::span<const int> choices) {
  if (n < 3) {
    throw std::domain_error("decoding needs n >= 3, got " + std::to_string(n));
  }
  if (choices.size() != static_cast<std::size_t>(n - 3)) {
    throw std::domain_error("insertion code for n=" + std::to_string(n) +
                            " needs " + std::to_string(n - 3) + " choices, got " +
                            std::to_string(choices.size()));
  }

  tree_.leaf_count_ = n;
  auto& edges = tree_.edges_;
  auto& slots = tree_.neighbor_slots_;
  edges.clear();
  edges.reserve(static_cast<std::size_t>(2 * n - 3));
  slots.assign(3 * static_cast<std::size_t>(2 * n - 2), -1);

  // Unique 3-leaf tree: leaves 0,1,2 around the first internal node n.
  const int hub = static_cast<int>(n);
  for (int leaf = 0; leaf < 3; ++leaf) {
    edges.push_back({leaf, hub});
    slots[3 * static_cast<std::size_t>(leaf)] = hub;
    slots[3 * static_cast<std::size_t>(hub) + static_cast<std::size_t>(leaf)] = leaf;
  }

  for (std::size_t j = 0; j < choices.size(); ++j) {
    const int bound = static_cast<int>(edges.size());  // 2k-5 for leaf k = j+4
    const int choice = choices[j];
    if (choice < 1 || choice > bound) {
      throw std::domain_error("insertion choice " + std::to_string(choice) +
                              " out of [1, " + std::to_string(bound) +
                              "] at position " + std::to_string(j));
    }
    const int leaf = static_cast<int>(j) + 3;             // label j+4
    const int mid = static_cast<int>(n + j) + 1;          // new internal node
    auto& edge = edges[static_cast<std::size_t>(choice - 1)];
    const int u = edge.u;
    const int v = edge.v;

    edge.v = mid;  // (u,v) becomes (u,mid), keeping its creation index
    edges.push_back({mid, v});
    edges.push_back({mid, leaf});

    replace_neighbor(slots, u, v, mid);
    replace_neighbor(slots, v, u, mid);
    const std::size_t base = 3 * static_cast<std::size_t>(mid);
    slots[base] = u;
    slots[base + 1] = v;
    slots[base + 2] = leaf;
    slots[3 * static_cast<std::size_t>(leaf)] = mid;
  }
  return tree_;
}

PhyloTree decode(std::int64_t n, const InsertionCode& code) {
  TreeBuilder builder;
  return builder.decode(n, code.choices);
}

namespace detail {

void check_enumerable(std::int64_t n, std::int64_t n_max) {
  if (n < 3) {
    throw std::domain_error("enumeration needs n >= 3, got " + std::to_string(n));
  }
  if (n > n_max) {
    throw std::domain_error(
        "refusing to enumerate T_" + std::to_string(n) + ": (2n-5)!! trees exceed " +
        "the configured bound n_max=" + std::to_string(n_max) +
        "; raise the bound explicitly for larger machines");
  }
}

std::vector<int> first_code(std::int64_t n, std::span<const int> prefix) {
  const std::size_t length = static_cast<std::size_t>(n - 3);
  if (prefix.size() > length) {
    throw std::domain_error("enumeration prefix longer than the code");
  }
  std::vector<int> choices(length, 1);
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    const int bound = 2 * static_cast<int>(j) + 3;
    if (prefix[j] < 1 || prefix[j] > bound) {
      throw std::domain_error("enumeration prefix out of range at position " +
                              std::to_string(j));
    }
    choices[j] = prefix[j];
  }
  return choices;
}

bool advance_code(std::vector<int>& choices, std::size_t fixed_prefix) {
  for (std::size_t j = choices.size(); j-- > fixed_prefix;) {
    if (choices[j] < 2 * static_cast<int>(j) + 3) {
      ++choices[j];
      return true;
    }
    choices[j] = 1;
  }
  return false;
}

}  // namespace detail

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::domain_error("empty range for a bounded draw");
  }
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

PhyloTree sample_uniform(std::int64_t n, std::uint64_t seed) {
  if (n < 3) {
    throw std::domain_error("sampling needs n >= 3, got " + std::to_string(n));
  }
  SplitMix64 gen(seed);
  std::vector<int> choices(static_cast<std::size_t>(n - 3));
  for (std::size_t j = 0; j < choices.size(); ++j) {
    const std::uint64_t bound = 2 * static_cast<std::uint64_t>(j) + 3;
    choices[j] = 1 + static_cast<int>(gen.next_below(bound));
  }
  TreeBuilder builder;
  return builder.decode(n, choices);
}

std::int64_t leaf_distance(const PhyloTree& tree, std::int64_t k, std::int64_t l) {
  const std::int64_t n = tree.leaf_count();
  if (k < 1 || k > n || l < 1 || l > n) {
    throw std::domain_error("leaf labels must lie in 1..n");
  }
  if (k == l) {
    throw std::domain_error("leaf distance needs two distinct leaves");
  }
  const int source = static_cast<int>(k - 1);
  const int target = static_cast<int>(l - 1);
  std::vector<std::int64_t> depth(static_cast<std::size_t>(tree.node_count()), -1);
  std::vector<int> frontier{source};
  depth[static_cast<std::size_t>(source)] = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (const int node : frontier) {
      for (const int nb : tree.neighbors(node)) {
        if (depth[static_cast<std::size_t>(nb)] >= 0) {
          continue;
        }
        depth[static_cast<std::size_t>(nb)] = depth[static_cast<std::size_t>(node)] + 1;
        if (nb == target) {
          return depth[static_cast<std::size_t>(nb)];
        }
        next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("leaves are disconnected; the tree is malformed");
}

namespace {

std::vector<std::uint64_t> merge_histograms(std::vector<std::vector<std::uint64_t>> parts) {
  std::vector<std::uint64_t> total = std::move(parts.front());
  for (std::size_t p = 1; p < parts.size(); ++p) {
    for (std::size_t i = 0; i < total.size(); ++i) {
      total[i] += parts[p][i];
    }
  }
  return total;
}

}  // namespace

DistanceDistribution empirical_distribution(std::int64_t n, std::int64_t n_max,
                                            int threads) {
  detail::check_enumerable(n, n_max);
  const std::size_t bins = static_cast<std::size_t>(n - 1);
  std::vector<std::uint64_t> histogram(bins, 0);

  const std::int64_t prefix_length = std::min<std::int64_t>(3, n - 3);
  if (threads <= 1 || prefix_length == 0) {
    enumerate(
        n,
        [&](const PhyloTree& tree) {
          ++histogram[static_cast<std::size_t>(leaf_distance(tree, 1, 2) - 1)];
        },
        n_max);
  } else {
    // Partition the code space by its leading choices and farm the
    // partitions out; visitor state is thread-local and merged at the end.
    std::vector<std::vector<int>> prefixes;
    std::vector<int> prefix(static_cast<std::size_t>(prefix_length), 1);
    do {
      prefixes.push_back(prefix);
    } while (detail::advance_code(prefix, 0));

    const int worker_count =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads),
                                               prefixes.size()));
    std::atomic<std::size_t> next_prefix{0};
    std::vector<std::vector<std::uint64_t>> parts(
        static_cast<std::size_t>(worker_count), std::vector<std::uint64_t>(bins, 0));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        auto& local = parts[static_cast<std::size_t>(w)];
        for (;;) {
          const std::size_t idx = next_prefix.fetch_add(1);
          if (idx >= prefixes.size()) {
            break;
          }
          enumerate_prefix(
              n, prefixes[idx],
              [&](const PhyloTree& tree) {
                ++local[static_cast<std::size_t>(leaf_distance(tree, 1, 2) - 1)];
              },
              n_max);
        }
      });
    }
    for (auto& worker : workers) {
      worker.join();
    }
    histogram = merge_histograms(std::move(parts));
  }

  std::vector<BigCount> counts;
  counts.reserve(bins);
  for (const std::uint64_t c : histogram) {
    counts.emplace_back(c);
  }
  return DistanceDistribution(n, std::move(counts));
}

std::vector<std::uint64_t> monte_carlo_distribution(
    std::int64_t n, std::int64_t samples, std::uint64_t seed,
    const std::function<void(const PhyloTree&)>& on_sample) {
  if (n < 3) {
    throw std::domain_error("sampling needs n >= 3, got " + std::to_string(n));
  }
  if (samples < 1) {
    throw std::domain_error("need at least one sample");
  }
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n - 1), 0);
  SplitMix64 gen(seed);
  std::vector<int> choices(static_cast<std::size_t>(n - 3));
  TreeBuilder builder;
  for (std::int64_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < choices.size(); ++j) {
      const std::uint64_t bound = 2 * static_cast<std::uint64_t>(j) + 3;
      choices[j] = 1 + static_cast<int>(gen.next_below(bound));
    }
    const PhyloTree& tree = builder.decode(n, choices);
    ++histogram[static_cast<std::size_t>(leaf_distance(tree, 1, 2) - 1)];
    if (on_sample) {
      on_sample(tree);
    }
  }
  return histogram;
}

double kolmogorov_distance(const std::vector<std::uint64_t>& histogram,
                           const DistanceDistribution& exact) {
  if (histogram.size() != exact.counts().size()) {
    throw std::domain_error("histogram and distribution cover different supports");
  }
  std::uint64_t samples = 0;
  for (const std::uint64_t c : histogram) {
    samples += c;
  }
  if (samples == 0) {
    throw std::domain_error("empty histogram");
  }
  const BigCount total = exact.total();
  double sup = 0.0;
  std::uint64_t running = 0;
  BigCount exact_running;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    running += histogram[i];
    exact_running += exact.counts()[i];
    const double ecdf =
        static_cast<double>(running) / static_cast<double>(samples);
    const double cdf = BigRatio(exact_running, total).to_double();
    sup = std::max(sup, std::abs(ecdf - cdf));
  }
  return sup;
}

std::vector<std::uint64_t> canonical_splits(const PhyloTree& tree) {
  const std::int64_t n = tree.leaf_count();
  if (n > 64) {
    throw std::domain_error("split signatures support up to 64 leaves");
  }
  const int nodes = tree.node_count();
  std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(nodes));

  // Root at leaf 1 so that no subtree mask contains it; child masks of
  // internal edges are then already normalized.
  parent[0] = -1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int node = order[head];
    for (const int nb : tree.neighbors(node)) {
      if (parent[static_cast<std::size_t>(nb)] == -2) {
        parent[static_cast<std::size_t>(nb)] = node;
        order.push_back(nb);
      }
    }
  }

  std::vector<std::uint64_t> mask(static_cast<std::size_t>(nodes), 0);
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const int node = order[idx];
    if (tree.is_leaf(node)) {
      mask[static_cast<std::size_t>(node)] |= std::uint64_t{1} << node;
    }
    const int par = parent[static_cast<std::size_t>(node)];
    if (par >= 0) {
      mask[static_cast<std::size_t>(par)] |= mask[static_cast<std::size_t>(node)];
    }
  }

  std::vector<std::uint64_t> splits;
  for (const auto& edge : tree.edges()) {
    if (tree.is_leaf(edge.u) || tree.is_leaf(edge.v)) {
      continue;  // pendant splits are shared by every tree on the leaf set
    }
    const int child = parent[static_cast<std::size_t>(edge.v)] == edge.u ? edge.v
                                                                         : edge.u;
    splits.push_back(mask[static_cast<std::size_t>(child)]);
  }
  std::sort(splits.begin(), splits.end());
  return splits;
}

std::string to_newick(const PhyloTree& tree) {
  const int root = tree.neighbors(0)[0];
  const int nodes = tree.node_count();
  std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(nodes));
  parent[static_cast<std::size_t>(root)] = -1;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int node = order[head];
    for (const int nb : tree.neighbors(node)) {
      if (parent[static_cast<std::size_t>(nb)] == -2) {
        parent[static_cast<std::size_t>(nb)] = node;
        order.push_back(nb);
      }
    }
  }

  std::vector<std::string> rendered(static_cast<std::size_t>(nodes));
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const int node = order[idx];
    if (tree.is_leaf(node)) {
      rendered[static_cast<std::size_t>(node)] = std::to_string(node + 1);
      continue;
    }
    std::string s = "(";
    bool first = true;
    for (const int nb : tree.neighbors(node)) {
      if (nb == parent[static_cast<std::size_t>(node)]) {
        continue;
      }
      if (!first) {
        s += ",";
      }
      s += rendered[static_cast<std::size_t>(nb)];
      first = false;
    }
    s += ")";
    rendered[static_cast<std::size_t>(node)] = std::move(s);
  }
  return rendered[static_cast<std::size_t>(root)] + ";";
}

}  // namespace phylodist
