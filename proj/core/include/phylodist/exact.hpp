#pragma once

#include <cstdint>

#include "phylodist/distribution.hpp"
#include "phylodist/numbers.hpp"

namespace phylodist {

/// Number of fully resolved unrooted trees with n labeled leaves:
/// (2n-5)!! for n >= 3, and 1 for n in {1, 2}.
BigCount tree_count(std::int64_t n);

/// Number of trees with n leaves in which leaves 1 and 2 are at distance i:
/// c_i = (i-1)(2n-i-4)!/(2(n-i-1))!! for i <= n-2, and (n-2)! for i = n-1.
/// The quotient is divided out exactly; a remainder signals a formula bug.
BigCount distance_count(std::int64_t n, std::int64_t i);

/// All counts c_1..c_{n-1} for n >= 3.
DistanceDistribution distribution(std::int64_t n);

/// Fraction of trees with distance <= k, via the closed form
/// 1 - 2^k (n-3)! (2n-4-k)! / (2 (2n-5)! (n-2-k)!). At k = n-1 the tail
/// term contains 1/(-1)!, taken as 0 (reciprocal-gamma convention), so the
/// result is exactly 1.
BigRatio cumulative_fraction(std::int64_t n, std::int64_t k);

/// Same fraction as a literal partial sum of distance_count values over
/// tree_count; the independent cross-check of the closed form.
BigRatio cumulative_fraction_direct(std::int64_t n, std::int64_t k);

/// Largest k whose cumulative count does not exceed half the trees.
/// Exact for every n: small n by definitional scan, large n by log-space
/// binary search with exact confirmation at the boundary.
std::int64_t median(std::int64_t n);

/// Largest k with sum_{i<=k} c_i <= p * (2n-5)!!, for exact p in (0,1).
std::int64_t percentile(std::int64_t n, const BigRatio& p);

/// Mean distance between two leaves: 4^(n-2) / C(2(n-2), n-2), exact.
BigRatio mean_distance(std::int64_t n);

/// Variance of the distance: 4n - 6 - mu - mu^2 with mu = mean_distance(n).
BigRatio variance_distance(std::int64_t n);

/// Exact mean, variance and median bundled per n.
SummaryStats summarize(std::int64_t n);

/// Limit approximation of the median: sqrt(4 ln(2) n), plus the
/// second-order constant 1/2 - ln(2) when refined is set. Defined for
/// n >= 1 (values below n = 3 are extrapolation only).
double median_asymptotic(std::int64_t n, bool refined = false);

/// Limit approximation of the p-percentile: sqrt(-4 ln(1-p) n).
double percentile_asymptotic(std::int64_t n, double p);

namespace detail {

/// Definitional percentile: scans cumulative counts with cross-multiplied
/// integer comparisons. Cost grows with n; intended for n <= the cutoff.
std::int64_t percentile_exact(std::int64_t n, const BigRatio& p);

/// Scalable percentile: binary search on the strictly decreasing log of
/// the cumulative tail term, with the boundary comparisons redone in exact
/// arithmetic whenever the floating margin is below 1e-9 of the lgamma
/// cancellation scale.
std::int64_t percentile_logspace(std::int64_t n, const BigRatio& p);

/// log of the tail term 2^(k-1) (n-3)! (2n-4-k)! / ((2n-5)! (n-2-k)!).
double log_tail(std::int64_t n, std::int64_t k);

/// Exact comparison tail(n, k) >= 1 - p via cross-multiplied products.
bool tail_at_least(std::int64_t n, std::int64_t k, const BigRatio& p);

/// Strategy switch point between the two percentile paths.
inline constexpr std::int64_t kPercentileExactCutoff = 512;

}  // namespace detail

}  // namespace phylodist
