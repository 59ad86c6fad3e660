#include "phylodist/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace phylodist {

namespace {

void require_leaf_count(std::int64_t n) {
  if (n < 3) {
    throw std::domain_error("leaf count must be at least 3, got " +
                            std::to_string(n));
  }
}

void require_index(std::int64_t n, std::int64_t i, const char* what) {
  if (i < 1 || i > n - 1) {
    throw std::domain_error(std::string(what) + " must lie in [1, n-1], got " +
                            std::to_string(i) + " for n=" + std::to_string(n));
  }
}

double log_gamma(double x) {
#ifdef __GLIBC__
  int sign = 0;
  return lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace

BigCount tree_count(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("tree count needs at least one leaf, got " +
                            std::to_string(n));
  }
  if (n <= 2) {
    return BigCount(std::uint64_t{1});
  }
  return double_factorial(2 * n - 5);
}

BigCount distance_count(std::int64_t n, std::int64_t i) {
  require_leaf_count(n);
  require_index(n, i, "distance");
  if (i == n - 1) {
    return factorial(n - 2);
  }
  // c_i = (i-1)(2n-i-4)! / (2^(n-i-1) (n-i-1)!), always integral.
  mpz_class num = factorial(2 * n - i - 4).value() * (i - 1);
  const mpz_class den = pow2(n - i - 1).value() * factorial(n - i - 1).value();
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("distance count is not integral at n=" +
                           std::to_string(n) + ", i=" + std::to_string(i));
  }
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return BigCount(std::move(num));
}

DistanceDistribution distribution(std::int64_t n) {
  require_leaf_count(n);
  std::vector<BigCount> counts;
  counts.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    counts.push_back(distance_count(n, i));
  }
  return DistanceDistribution(n, std::move(counts));
}

BigRatio cumulative_fraction(std::int64_t n, std::int64_t k) {
  require_leaf_count(n);
  require_index(n, k, "cumulative index");
  if (k == n - 1) {
    // Tail term carries 1/(-1)! = 0, so the fraction closes to exactly 1.
    return BigRatio(1);
  }
  mpz_class num = pow2(k).value() * factorial(n - 3).value() *
                  factorial(2 * n - 4 - k).value();
  mpz_class den = 2 * factorial(2 * n - 5).value() * factorial(n - 2 - k).value();
  return BigRatio(1) - BigRatio(std::move(num), std::move(den));
}

BigRatio cumulative_fraction_direct(std::int64_t n, std::int64_t k) {
  require_leaf_count(n);
  require_index(n, k, "cumulative index");
  BigCount sum;
  for (std::int64_t i = 1; i <= k; ++i) {
    sum += distance_count(n, i);
  }
  return BigRatio(sum, tree_count(n));
}

namespace detail {

double log_tail(std::int64_t n, std::int64_t k) {
  const double ln2 = std::log(2.0);
  return static_cast<double>(k - 1) * ln2 + log_gamma(static_cast<double>(n - 2)) +
         log_gamma(static_cast<double>(2 * n - 3 - k)) -
         log_gamma(static_cast<double>(2 * n - 4)) -
         log_gamma(static_cast<double>(n - 1 - k));
}

bool tail_at_least(std::int64_t n, std::int64_t k, const BigRatio& p) {
  // tail(k) >= 1-p  <=>  pd 2^(k-1) (n-3)!/(n-2-k)! >= (pd-pn) (2n-5)!/(2n-4-k)!
  // with both factorial quotients expanded as products of k-1 factors.
  mpz_class lhs = p.denominator() * pow2(k - 1).value();
  for (std::int64_t j = n - 1 - k; j <= n - 3; ++j) {
    mpz_mul_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(j));
  }
  mpz_class rhs = p.denominator() - p.numerator();
  for (std::int64_t j = 2 * n - 3 - k; j <= 2 * n - 5; ++j) {
    mpz_mul_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return lhs >= rhs;
}

std::int64_t percentile_exact(std::int64_t n, const BigRatio& p) {
  const mpz_class threshold = p.numerator() * tree_count(n).value();
  const mpz_class& scale = p.denominator();
  mpz_class cumulative = 0;
  std::int64_t best = 1;  // c_1 = 0, so k = 1 always qualifies
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    cumulative += distance_count(n, k).value();
    if (cumulative * scale <= threshold) {
      best = k;
    } else {
      break;  // cumulative sums are non-decreasing
    }
  }
  return best;
}

std::int64_t percentile_logspace(std::int64_t n, const BigRatio& p) {
  const BigRatio tail_target = BigRatio(1) - p;
  const double log_target = std::log(tail_target.to_double());

  // Decide tail(k) >= 1-p. Floating comparisons are trusted only when the
  // margin clears 1e-9 of the evaluation's cancellation scale; otherwise
  // the comparison is redone exactly.
  const auto qualifies = [&](std::int64_t k) {
    const double margin = log_tail(n, k) - log_target;
    const double ln2 = std::log(2.0);
    const double scale = std::abs(static_cast<double>(k - 1)) * ln2 +
                         log_gamma(static_cast<double>(n - 2)) +
                         log_gamma(static_cast<double>(2 * n - 3 - k)) +
                         log_gamma(static_cast<double>(2 * n - 4)) +
                         log_gamma(static_cast<double>(n - 1 - k)) +
                         std::abs(log_target);
    if (std::abs(margin) < 1e-9 * std::max(scale, 1.0)) {
      return tail_at_least(n, k, p);
    }
    return margin >= 0.0;
  };

  std::int64_t lo = 1;       // tail(1) = 1 > 1-p, always qualifies
  std::int64_t hi = n - 2;   // k = n-1 never qualifies (cumulative = total)
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (qualifies(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace detail

std::int64_t percentile(std::int64_t n, const BigRatio& p) {
  require_leaf_count(n);
  if (p <= BigRatio(0) || p >= BigRatio(1)) {
    throw std::domain_error("percentile level must lie strictly in (0,1), got " +
                            p.to_string());
  }
  if (n <= detail::kPercentileExactCutoff) {
    return detail::percentile_exact(n, p);
  }
  return detail::percentile_logspace(n, p);
}

std::int64_t median(std::int64_t n) { return percentile(n, BigRatio(1, 2)); }

BigRatio mean_distance(std::int64_t n) {
  require_leaf_count(n);
  return BigRatio(pow2(2 * (n - 2)), binomial(2 * (n - 2), n - 2));
}

BigRatio variance_distance(std::int64_t n) {
  require_leaf_count(n);
  const BigRatio mu = mean_distance(n);
  return BigRatio(4 * n - 6) - mu - mu * mu;
}

SummaryStats summarize(std::int64_t n) {
  require_leaf_count(n);
  return SummaryStats{n, mean_distance(n), variance_distance(n), median(n)};
}

double median_asymptotic(std::int64_t n, bool refined) {
  if (n < 1) {
    throw std::domain_error("median asymptote needs n >= 1, got " +
                            std::to_string(n));
  }
  const double plain = std::sqrt(4.0 * std::log(2.0) * static_cast<double>(n));
  return refined ? plain + 0.5 - std::log(2.0) : plain;
}

double percentile_asymptotic(std::int64_t n, double p) {
  if (n < 1) {
    throw std::domain_error("percentile asymptote needs n >= 1, got " +
                            std::to_string(n));
  }
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("percentile level must lie strictly in (0,1)");
  }
  return std::sqrt(-4.0 * std::log1p(-p) * static_cast<double>(n));
}

}  // namespace phylodist
