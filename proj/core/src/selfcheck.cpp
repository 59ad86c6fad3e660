#include "phylodist/selfcheck.hpp"

#include "phylodist/exact.hpp"
#include "phylodist/series.hpp"

namespace phylodist::selfcheck {

namespace {

std::string span_text(std::int64_t lo, std::int64_t hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

CheckResult check_enumeration_vs_formula(const VerifyOptions& options) {
  CheckResult result;
  result.name = "enumeration-vs-formula";
  result.range = span_text(3, options.max_n_enum);
  for (std::int64_t n = 3; n <= options.max_n_enum; ++n) {
    const DistanceDistribution enumerated =
        empirical_distribution(n, options.enum_bound, options.threads);
    for (std::int64_t i = 1; i <= n - 1; ++i) {
      if (!(enumerated.count(i) == distance_count(n, i))) {
        result.passed = false;
        result.counterexample = "n=" + std::to_string(n) + ", i=" +
                                std::to_string(i) + ": enumerated " +
                                enumerated.count(i).to_string() + " vs formula " +
                                distance_count(n, i).to_string();
        return result;
      }
    }
  }
  return result;
}

CheckResult check_cumulative_equivalence(std::int64_t max_n) {
  CheckResult result;
  result.name = "closed-form-vs-partial-sum";
  result.range = span_text(3, max_n);
  for (std::int64_t n = 3; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= n - 1; ++k) {
      const BigRatio closed = cumulative_fraction(n, k);
      const BigRatio direct = cumulative_fraction_direct(n, k);
      if (!(closed == direct)) {
        result.passed = false;
        result.counterexample = "n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + ": closed " + closed.to_string() +
                                " vs direct " + direct.to_string();
        return result;
      }
    }
  }
  return result;
}

CheckResult check_series_vs_formula(std::int64_t max_n) {
  CheckResult result;
  result.name = "series-vs-formula";
  result.range = span_text(3, max_n);
  if (auto mismatch = first_count_mismatch(
          3, max_n, [](std::int64_t n, std::int64_t i) { return c_via_series(n, i); },
          [](std::int64_t n, std::int64_t i) { return distance_count(n, i); })) {
    result.passed = false;
    result.counterexample = *mismatch;
  }
  return result;
}

CheckResult check_certificate(std::int64_t max_n_ratio) {
  CheckResult result;
  result.name = "telescoping-certificate";
  result.range = "symbolic; ratio n=4.." + std::to_string(max_n_ratio);
  if (!telescoping_certificate().holds_symbolically()) {
    result.passed = false;
    result.counterexample = "Gosper relation fails as a bivariate identity";
    return result;
  }
  for (std::int64_t n = 4; n <= max_n_ratio; ++n) {
    if (!verify_certificate(n)) {
      result.passed = false;
      result.counterexample = "certificate identity fails at n=" + std::to_string(n);
      return result;
    }
    for (std::int64_t i = 1; i <= n - 3; ++i) {
      if (!term_ratio_check(n, i)) {
        result.passed = false;
        result.counterexample = "term ratio fails at n=" + std::to_string(n) +
                                ", i=" + std::to_string(i);
        return result;
      }
    }
  }
  return result;
}

CheckResult check_telescoping(std::int64_t max_n) {
  CheckResult result;
  result.name = "telescoped-sum";
  result.range = span_text(4, max_n);
  for (std::int64_t n = 4; n <= max_n; ++n) {
    const BigCount boundary = s_k_closed(n, 2);
    const BigCount expected_boundary =
        BigCount(4 * factorial_quotient(2 * n - 6, n - 3).value());
    if (!(boundary == expected_boundary)) {
      result.passed = false;
      result.counterexample = "S_2 boundary at n=" + std::to_string(n) + ": " +
                              boundary.to_string() + " vs 4(2n-6)!/(n-3)! = " +
                              expected_boundary.to_string();
      return result;
    }
    const BigRatio reassembly_scale =
        BigRatio(factorial(n - 3), BigCount(4 * factorial(2 * n - 5).value()));
    for (std::int64_t k = 2; k <= n - 2; ++k) {
      const BigCount closed = s_k_closed(n, k);
      const BigCount direct = s_k_direct(n, k);
      if (!(closed == direct)) {
        result.passed = false;
        result.counterexample = "n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + ": closed " + closed.to_string() +
                                " vs direct " + direct.to_string();
        return result;
      }
      if (!(reassembly_scale * BigRatio(closed) == cumulative_fraction(n, k))) {
        result.passed = false;
        result.counterexample = "reassembled fraction mismatch at n=" +
                                std::to_string(n) + ", k=" + std::to_string(k);
        return result;
      }
    }
  }
  return result;
}

std::vector<CheckResult> run_all(const VerifyOptions& options) {
  return {
      check_enumeration_vs_formula(options),
      check_cumulative_equivalence(options.max_n_formula),
      check_series_vs_formula(options.max_n_series),
      check_certificate(),
      check_telescoping(options.max_n_formula),
  };
}

}  // namespace phylodist::selfcheck
