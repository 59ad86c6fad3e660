#include "phylodist/series.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "phylodist/exact.hpp"

using phylodist::BigCount;
using phylodist::BigRatio;
using phylodist::Polynomial2;
using phylodist::PowerSeries;

TEST_CASE("b_series expands 1 - sqrt(1-2x)") {
  const PowerSeries b = phylodist::b_series(4);
  CHECK(b.coefficient(0) == BigRatio(0));
  CHECK(b.coefficient(1) == BigRatio(1));
  CHECK(b.coefficient(2) == BigRatio(1, 2));
  CHECK(b.coefficient(3) == BigRatio(1, 2));
  CHECK(b.coefficient(4) == BigRatio(5, 8));

  const PowerSeries b9 = phylodist::b_series(9);
  CHECK(b9.coefficient(5) == BigRatio(7, 8));
  CHECK(b9.coefficient(6) == BigRatio(21, 16));
  CHECK(b9.coefficient(7) == BigRatio(33, 16));
  CHECK(b9.coefficient(8) == BigRatio(429, 128));
  CHECK(b9.coefficient(9) == BigRatio(715, 128));

  CHECK_THROWS_AS(phylodist::b_series(0), std::domain_error);
}

TEST_CASE("squaring 1 - B recovers 1 - 2x through the full order") {
  const int order = 200;
  PowerSeries one_minus_b(order);
  one_minus_b.set_coefficient(0, BigRatio(1));
  one_minus_b -= phylodist::b_series(order);
  const PowerSeries square =
      PowerSeries::multiply(one_minus_b, one_minus_b, order);
  CHECK(square.coefficient(0) == BigRatio(1));
  CHECK(square.coefficient(1) == BigRatio(-2));
  for (int i = 2; i <= order; ++i) {
    CHECK(square.coefficient(i) == BigRatio(0));
  }
}

TEST_CASE("multiply matches a naive convolution") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 5);
  const int order = 12;
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries a(order);
    PowerSeries b(order);
    for (int i = 0; i <= order; ++i) {
      a.set_coefficient(i, BigRatio(coeff(gen), den(gen)));
      b.set_coefficient(i, BigRatio(coeff(gen), den(gen)));
    }
    const PowerSeries product = PowerSeries::multiply(a, b, order);
    for (int k = 0; k <= order; ++k) {
      BigRatio expected;
      for (int j = 0; j <= k; ++j) {
        expected += a.coefficient(j) * b.coefficient(k - j);
      }
      CHECK(product.coefficient(k) == expected);
    }
  }
}

TEST_CASE("series_power") {
  const PowerSeries b = phylodist::b_series(3);
  const PowerSeries b2 = phylodist::series_power(b, 2, 3);
  CHECK(b2.coefficient(0) == BigRatio(0));
  CHECK(b2.coefficient(1) == BigRatio(0));
  CHECK(b2.coefficient(2) == BigRatio(1));
  CHECK(b2.coefficient(3) == BigRatio(1));

  const PowerSeries identity = phylodist::series_power(b, 0, 3);
  CHECK(identity.coefficient(0) == BigRatio(1));
  for (int i = 1; i <= 3; ++i) {
    CHECK(identity.coefficient(i) == BigRatio(0));
  }

  // The two coefficients of B^(i-1) printed in the source derivation:
  // [x^(i-1)] = 1 and [x^i] = (i-1)/2.
  const PowerSeries base = phylodist::b_series(42);
  for (std::int64_t i = 2; i <= 41; ++i) {
    const PowerSeries power = phylodist::series_power(base, i - 1, 42);
    CHECK(power.coefficient(static_cast<int>(i - 1)) == BigRatio(1));
    CHECK(power.coefficient(static_cast<int>(i)) == BigRatio(i - 1, 2));
  }

  CHECK_THROWS_AS(phylodist::series_power(b, -1, 3), std::domain_error);
  CHECK_THROWS_AS(phylodist::series_power(b, 2, 9), std::domain_error);
}

TEST_CASE("c_via_series reproduces the closed-form counts") {
  CHECK(phylodist::c_via_series(4, 2) == BigCount(std::uint64_t{1}));
  CHECK(phylodist::c_via_series(5, 3) == BigCount(std::uint64_t{6}));
  CHECK(phylodist::c_via_series(5, 1) == BigCount());
  for (std::int64_t n = 3; n <= 25; ++n) {
    for (std::int64_t i = 1; i <= n - 1; ++i) {
      CHECK(phylodist::c_via_series(n, i) == phylodist::distance_count(n, i));
    }
  }
  CHECK_THROWS_AS(phylodist::c_via_series(2, 1), std::domain_error);
  CHECK_THROWS_AS(phylodist::c_via_series(5, 5), std::domain_error);
}

TEST_CASE("Polynomial2 algebra") {
  const Polynomial2 i = Polynomial2::var_i();
  const Polynomial2 n = Polynomial2::var_n();

  // (i+1)^2 = i^2 + 2i + 1
  const Polynomial2 square = i * i;
  const Polynomial2 shifted = square.shift_i(1);
  CHECK(shifted == square + i * Polynomial2::constant(2) + Polynomial2::constant(1));

  const Polynomial2 mixed = i * n - Polynomial2::constant(3);
  CHECK(mixed.coefficient(1, 1) == 1);
  CHECK(mixed.coefficient(0, 0) == -3);
  CHECK(mixed.substitute_n(5) == i * Polynomial2::constant(5) -
                                     Polynomial2::constant(3));
  CHECK((i - i).is_zero());
  CHECK(mixed.shift_i(-1) == mixed.shift_i(1).shift_i(-2));
}

TEST_CASE("telescoping certificate") {
  const auto certificate = phylodist::telescoping_certificate();
  CHECK(certificate.holds_symbolically());
  CHECK(phylodist::verify_certificate(4));
  CHECK(phylodist::verify_certificate(10));
  CHECK(phylodist::verify_certificate(1000));

  // Negative control: a perturbed solution polynomial must be rejected.
  auto perturbed = certificate;
  perturbed.x = Polynomial2::var_i();
  CHECK_FALSE(perturbed.holds_symbolically());
  CHECK_FALSE(perturbed.holds_at(7));
}

TEST_CASE("hypergeometric term values") {
  CHECK(phylodist::hypergeometric_term(4, 1) == BigCount(std::uint64_t{8}));
  CHECK(phylodist::hypergeometric_term(5, 1) == BigCount(std::uint64_t{48}));
  CHECK(phylodist::hypergeometric_term(5, 2) == BigCount(std::uint64_t{96}));
  CHECK(phylodist::hypergeometric_term(6, 1) == BigCount(std::uint64_t{480}));
  CHECK(phylodist::hypergeometric_term(6, 2) == BigCount(std::uint64_t{960}));
  CHECK(phylodist::hypergeometric_term(6, 3) == BigCount(std::uint64_t{1152}));
  CHECK_THROWS_AS(phylodist::hypergeometric_term(6, 0), std::domain_error);
  CHECK_THROWS_AS(phylodist::hypergeometric_term(6, 5), std::domain_error);
}

TEST_CASE("term ratio identity over the sweep") {
  CHECK(phylodist::term_ratio_check(6, 1));
  CHECK(phylodist::term_ratio_check(5, 1));
  for (std::int64_t n = 4; n <= 50; ++n) {
    for (std::int64_t i = 1; i <= n - 3; ++i) {
      CHECK(phylodist::term_ratio_check(n, i));
    }
  }
  CHECK_THROWS_AS(phylodist::term_ratio_check(6, 4), std::domain_error);
  CHECK_THROWS_AS(phylodist::term_ratio_check(6, 0), std::domain_error);
  CHECK_THROWS_AS(phylodist::term_ratio_check(3, 1), std::domain_error);
}

TEST_CASE("telescoped sum closed form") {
  CHECK(phylodist::s_k_closed(5, 3) == BigCount(std::uint64_t{144}));
  CHECK(phylodist::s_k_closed(6, 2) == BigCount(std::uint64_t{480}));
  CHECK(phylodist::s_k_direct(5, 3) == BigCount(std::uint64_t{144}));
  CHECK(phylodist::s_k_direct(4, 2) == BigCount(std::uint64_t{8}));
  CHECK(phylodist::s_k_direct(6, 4) == BigCount(std::uint64_t{2592}));
  CHECK(phylodist::s_k_closed(7, 5) == BigCount(std::uint64_t{52800}));

  for (std::int64_t n = 4; n <= 60; ++n) {
    // The boundary value that pins g(n): S_2 = 4(2n-6)!/(n-3)!.
    CHECK(phylodist::s_k_closed(n, 2) ==
          BigCount(4 * phylodist::factorial_quotient(2 * n - 6, n - 3).value()));
    CHECK(phylodist::s_k_direct(n, 2) == phylodist::hypergeometric_term(n, 1));
    for (std::int64_t k = 2; k <= n - 2; ++k) {
      CHECK(phylodist::s_k_closed(n, k) == phylodist::s_k_direct(n, k));
    }
  }

  CHECK_THROWS_AS(phylodist::s_k_closed(6, 1), std::domain_error);
  CHECK_THROWS_AS(phylodist::s_k_closed(6, 5), std::domain_error);
  CHECK_THROWS_AS(phylodist::s_k_closed(3, 2), std::domain_error);
  CHECK_THROWS_AS(phylodist::s_k_direct(6, 1), std::domain_error);
}

TEST_CASE("telescoped sum reassembles the cumulative fraction") {
  // Scaling S_k by (n-3)!/(4(2n-5)!) recovers the cumulative fraction,
  // index shift included.
  for (std::int64_t n = 4; n <= 50; ++n) {
    const BigRatio scale(phylodist::factorial(n - 3),
                         BigCount(4 * phylodist::factorial(2 * n - 5).value()));
    for (std::int64_t k = 2; k <= n - 2; ++k) {
      CHECK(scale * BigRatio(phylodist::s_k_direct(n, k)) ==
            phylodist::cumulative_fraction(n, k));
    }
  }
}
