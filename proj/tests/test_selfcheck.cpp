#include "phylodist/selfcheck.hpp"

#include <string>

#include "doctest.h"
#include "phylodist/exact.hpp"

using phylodist::BigCount;
using phylodist::selfcheck::VerifyOptions;

TEST_CASE("all verification families pass at reduced bounds") {
  VerifyOptions options;
  options.max_n_enum = 6;
  options.max_n_formula = 30;
  options.max_n_series = 20;
  for (const auto& result : phylodist::selfcheck::run_all(options)) {
    INFO(result.name, ": ", result.counterexample);
    CHECK(result.passed);
    CHECK(result.counterexample.empty());
  }
}

TEST_CASE("the sweep comparator reports the smallest counterexample") {
  const auto tampered = [](std::int64_t n, std::int64_t i) {
    BigCount c = phylodist::distance_count(n, i);
    if ((n == 5 && i == 2) || (n == 7 && i == 3)) {
      c += BigCount(std::uint64_t{1});  // injected off-by-one
    }
    return c;
  };
  const auto mismatch = phylodist::selfcheck::first_count_mismatch(
      3, 9, tampered,
      [](std::int64_t n, std::int64_t i) { return phylodist::distance_count(n, i); });
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->find("n=5, i=2") != std::string::npos);
  CHECK(mismatch->find("4 vs 3") != std::string::npos);

  const auto clean = phylodist::selfcheck::first_count_mismatch(
      3, 9, [](std::int64_t n, std::int64_t i) { return phylodist::distance_count(n, i); },
      [](std::int64_t n, std::int64_t i) { return phylodist::distance_count(n, i); });
  CHECK_FALSE(clean.has_value());
}

TEST_CASE("individual families carry their ranges") {
  const auto certificate = phylodist::selfcheck::check_certificate(20);
  CHECK(certificate.passed);
  CHECK(certificate.name == "telescoping-certificate");

  const auto telescoping = phylodist::selfcheck::check_telescoping(25);
  CHECK(telescoping.passed);
  CHECK(telescoping.range == "n=4..25");

  VerifyOptions options;
  options.max_n_enum = 5;
  const auto enumeration = phylodist::selfcheck::check_enumeration_vs_formula(options);
  CHECK(enumeration.passed);
  CHECK(enumeration.range == "n=3..5");
}
