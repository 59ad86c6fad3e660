#include "phylodist/numbers.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"

using phylodist::BigCount;
using phylodist::BigRatio;

TEST_CASE("BigCount rejects negative values and keeps exact arithmetic") {
  CHECK(BigCount().to_string() == "0");
  CHECK(BigCount(std::uint64_t{18446744073709551615ull}).to_string() ==
        "18446744073709551615");
  CHECK_THROWS_AS(BigCount(mpz_class(-1)), std::domain_error);

  BigCount a(std::uint64_t{7});
  a += BigCount(std::uint64_t{5});
  a *= BigCount(std::uint64_t{3});
  CHECK(a == BigCount(std::uint64_t{36}));
  CHECK(BigCount(std::uint64_t{2}) < BigCount(std::uint64_t{3}));
}

TEST_CASE("factorial kernels") {
  CHECK(phylodist::factorial(0) == BigCount(std::uint64_t{1}));
  CHECK(phylodist::factorial(5) == BigCount(std::uint64_t{120}));
  CHECK(phylodist::factorial(20).to_string() == "2432902008176640000");
  CHECK_THROWS_AS(phylodist::factorial(-1), std::domain_error);

  CHECK(phylodist::double_factorial(7) == BigCount(std::uint64_t{105}));
  CHECK(phylodist::double_factorial(8) == BigCount(std::uint64_t{384}));
  CHECK(phylodist::double_factorial(0) == BigCount(std::uint64_t{1}));
  CHECK(phylodist::double_factorial(-1) == BigCount(std::uint64_t{1}));

  CHECK(phylodist::factorial_quotient(10, 7) == BigCount(std::uint64_t{720}));
  CHECK(phylodist::factorial_quotient(6, 6) == BigCount(std::uint64_t{1}));
  CHECK(phylodist::factorial_quotient(6, 0) == phylodist::factorial(6));
  CHECK_THROWS_AS(phylodist::factorial_quotient(3, 5), std::domain_error);

  CHECK(phylodist::binomial(8, 4) == BigCount(std::uint64_t{70}));
  CHECK(phylodist::binomial(8, 9) == BigCount());
  CHECK(phylodist::binomial(8, 0) == BigCount(std::uint64_t{1}));

  CHECK(phylodist::pow2(10) == BigCount(std::uint64_t{1024}));
  CHECK(phylodist::pow2(0) == BigCount(std::uint64_t{1}));
}

TEST_CASE("double factorial splits into power of two times factorial") {
  // (2j)!! = 2^j j!, the identity the cumulative closed form leans on.
  for (std::int64_t j = 0; j <= 40; ++j) {
    CHECK(phylodist::double_factorial(2 * j) ==
          phylodist::pow2(j) * phylodist::factorial(j));
  }
}

TEST_CASE("BigRatio canonical form") {
  CHECK(BigRatio(6, 8).to_string() == "3/4");
  CHECK(BigRatio(3, -6).to_string() == "-1/2");
  CHECK(BigRatio(-3, -6).to_string() == "1/2");
  CHECK(BigRatio(0, 17).to_string() == "0");
  CHECK(BigRatio(10, 2).to_string() == "5");
  CHECK(BigRatio(7).is_integer());
  CHECK_FALSE(BigRatio(7, 2).is_integer());
  CHECK_THROWS_AS(BigRatio(1, 0), std::domain_error);

  CHECK(BigRatio(6, 8).numerator() == 3);
  CHECK(BigRatio(6, 8).denominator() == 4);
}

TEST_CASE("BigRatio arithmetic and exact comparisons") {
  CHECK(BigRatio(1, 3) + BigRatio(1, 6) == BigRatio(1, 2));
  CHECK(BigRatio(1, 3) - BigRatio(1, 2) == BigRatio(-1, 6));
  CHECK(BigRatio(2, 3) * BigRatio(9, 4) == BigRatio(3, 2));
  CHECK(BigRatio(2, 3) / BigRatio(4, 3) == BigRatio(1, 2));
  CHECK_THROWS_AS(BigRatio(1, 2) / BigRatio(0), std::domain_error);
  CHECK(-BigRatio(1, 2) == BigRatio(-1, 2));

  CHECK(BigRatio(1, 3) < BigRatio(34, 100));
  CHECK(BigRatio(1, 3) > BigRatio(33, 100));
  // A comparison floats would get wrong.
  const BigRatio tiny(1, 1000000007);
  CHECK(tiny + BigRatio(1) > BigRatio(1));
}

TEST_CASE("BigRatio parse round-trip") {
  CHECK(BigRatio::from_string("2/5") == BigRatio(2, 5));
  CHECK(BigRatio::from_string("-6/4") == BigRatio(-3, 2));
  CHECK(BigRatio::from_string("42") == BigRatio(42));
  CHECK_THROWS_AS(BigRatio::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(BigRatio::from_string("banana"), std::invalid_argument);
  CHECK_THROWS_AS(BigRatio::from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(BigRatio::from_string(""), std::invalid_argument);

  std::mt19937_64 gen(20240811);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  for (int trial = 0; trial < 300; ++trial) {
    const BigRatio r(num(gen), den(gen));
    CHECK(BigRatio::from_string(r.to_string()) == r);
  }
}
