#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace phylodist {

/// Arbitrary-precision non-negative integer. Holds tree counts and the
/// distance counts c_i, which reach (2n-5)!! and overflow any fixed width
/// long before the supported n range ends.
class BigCount {
 public:
  BigCount() : value_(0) {}
  BigCount(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}
  explicit BigCount(mpz_class value);

  const mpz_class& value() const { return value_; }

  std::string to_string() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  BigCount& operator+=(const BigCount& rhs);
  BigCount& operator*=(const BigCount& rhs);
  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& lhs, const BigCount& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigCount& lhs, const BigCount& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigCount& value);

/// Exact rational number, always in lowest terms with a positive
/// denominator. Comparisons and arithmetic never round.
class BigRatio {
 public:
  BigRatio() : value_(0) {}
  BigRatio(std::int64_t value) : value_(static_cast<long>(value)) {}
  BigRatio(std::int64_t num, std::int64_t den);
  BigRatio(const BigCount& num, const BigCount& den);
  BigRatio(mpz_class num, mpz_class den);
  explicit BigRatio(const BigCount& value) : value_(value.value()) {}

  /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  /// malformed input and std::domain_error on a zero denominator.
  static BigRatio from_string(std::string_view text);

  /// Renders "p/q", or just "p" when the value is an integer.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRatio& operator+=(const BigRatio& rhs);
  BigRatio& operator-=(const BigRatio& rhs);
  BigRatio& operator*=(const BigRatio& rhs);
  BigRatio& operator/=(const BigRatio& rhs);
  friend BigRatio operator+(BigRatio lhs, const BigRatio& rhs) { return lhs += rhs; }
  friend BigRatio operator-(BigRatio lhs, const BigRatio& rhs) { return lhs -= rhs; }
  friend BigRatio operator*(BigRatio lhs, const BigRatio& rhs) { return lhs *= rhs; }
  friend BigRatio operator/(BigRatio lhs, const BigRatio& rhs) { return lhs /= rhs; }
  BigRatio operator-() const;

  friend bool operator==(const BigRatio& lhs, const BigRatio& rhs) {
    return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const BigRatio& lhs, const BigRatio& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const BigRatio& value);

// Exact combinatoric kernels shared by the closed forms and their oracles.

/// m! for m >= 0.
BigCount factorial(std::int64_t m);

/// m!! (product of every other integer down to 1); 1 for m <= 0.
BigCount double_factorial(std::int64_t m);

/// a! / b! for a >= b >= 0, computed without forming b! separately.
BigCount factorial_quotient(std::int64_t a, std::int64_t b);

/// Binomial coefficient C(m, k); 0 outside 0 <= k <= m.
BigCount binomial(std::int64_t m, std::int64_t k);

/// 2^e for e >= 0.
BigCount pow2(std::int64_t e);

}  // namespace phylodist
