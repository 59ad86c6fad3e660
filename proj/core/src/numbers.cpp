#include "phylodist/numbers.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace phylodist {

BigCount::BigCount(mpz_class value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw std::domain_error("BigCount requires a non-negative value, got " +
                            value_.get_str());
  }
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  value_ *= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigCount& value) {
  return os << value.value();
}

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
  if (den == 0) {
    throw std::domain_error("BigRatio denominator must be nonzero");
  }
  mpq_class q;
  q.get_num() = std::move(num);
  q.get_den() = std::move(den);
  q.canonicalize();  // lowest terms, positive denominator
  return q;
}

}  // namespace

BigRatio::BigRatio(std::int64_t num, std::int64_t den)
    : value_(make_canonical(mpz_class(static_cast<long>(num)),
                            mpz_class(static_cast<long>(den)))) {}

BigRatio::BigRatio(const BigCount& num, const BigCount& den)
    : value_(make_canonical(num.value(), den.value())) {}

BigRatio::BigRatio(mpz_class num, mpz_class den)
    : value_(make_canonical(std::move(num), std::move(den))) {}

BigRatio BigRatio::from_string(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return BigRatio(mpz_class(s), mpz_class(1));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return BigRatio(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: \"" + s + "\"");
  }
}

std::string BigRatio::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRatio& BigRatio::operator+=(const BigRatio& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRatio& BigRatio::operator-=(const BigRatio& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRatio& BigRatio::operator*=(const BigRatio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRatio& BigRatio::operator/=(const BigRatio& rhs) {
  if (rhs.value_ == 0) {
    throw std::domain_error("BigRatio division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRatio BigRatio::operator-() const {
  BigRatio r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigRatio& value) {
  return os << value.to_string();
}

BigCount factorial(std::int64_t m) {
  if (m < 0) {
    throw std::domain_error("factorial of a negative integer");
  }
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return BigCount(std::move(r));
}

BigCount double_factorial(std::int64_t m) {
  if (m <= 0) {
    return BigCount(std::uint64_t{1});
  }
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return BigCount(std::move(r));
}

BigCount factorial_quotient(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) {
    throw std::domain_error("factorial_quotient requires a >= b >= 0");
  }
  mpz_class r(1);
  for (std::int64_t j = b + 1; j <= a; ++j) {
    mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return BigCount(std::move(r));
}

BigCount binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) {
    return BigCount();
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return BigCount(std::move(r));
}

BigCount pow2(std::int64_t e) {
  if (e < 0) {
    throw std::domain_error("pow2 requires a non-negative exponent");
  }
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return BigCount(std::move(r));
}

}  // namespace phylodist
