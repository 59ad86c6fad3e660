#pragma once

#include <cstdint>
#include <vector>

#include "phylodist/numbers.hpp"

namespace phylodist {

/// Truncated formal power series with exact rational coefficients.
/// Arithmetic is exact on every retained coefficient; truncation only
/// discards degrees above the order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<BigRatio> coefficients);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the truncation order.
  const BigRatio& coefficient(int i) const;

  void set_coefficient(int i, BigRatio value);

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
  friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }

  /// Product truncated to min(order, lhs.order) coefficients.
  static PowerSeries multiply(const PowerSeries& lhs, const PowerSeries& rhs, int order);

  bool operator==(const PowerSeries& rhs) const = default;

 private:
  std::vector<BigRatio> coefficients_;  // index = degree, size order+1
};

/// Taylor expansion of B(x) = 1 - sqrt(1-2x) through the given order,
/// computed exactly from the defining relation B = x + B^2/2.
PowerSeries b_series(int order);

/// s^e truncated to the given order; e = 0 yields the series 1.
PowerSeries series_power(const PowerSeries& s, std::int64_t e, int order);

/// Generating-function route to the distance counts: (n-2)! times the
/// coefficient of x^(n-2) in B(x)^(i-1). Throws std::logic_error if the
/// result is not a non-negative integer, which would signal a series bug.
BigCount c_via_series(std::int64_t n, std::int64_t i);

/// Polynomial with integer coefficients in the summation variable i and
/// the leaf-count parameter n, dense over small degrees. Backs the
/// symbolic certificate check.
class Polynomial2 {
 public:
  Polynomial2() = default;

  /// Single term c * i^deg_i * n^deg_n.
  static Polynomial2 term(mpz_class c, int deg_i, int deg_n);
  static Polynomial2 constant(std::int64_t c) { return term(mpz_class(static_cast<long>(c)), 0, 0); }
  static Polynomial2 var_i() { return term(mpz_class(1), 1, 0); }
  static Polynomial2 var_n() { return term(mpz_class(1), 0, 1); }

  Polynomial2& operator+=(const Polynomial2& rhs);
  Polynomial2& operator-=(const Polynomial2& rhs);
  friend Polynomial2 operator+(Polynomial2 lhs, const Polynomial2& rhs) { return lhs += rhs; }
  friend Polynomial2 operator-(Polynomial2 lhs, const Polynomial2& rhs) { return lhs -= rhs; }
  friend Polynomial2 operator*(const Polynomial2& lhs, const Polynomial2& rhs);

  /// Substitutes i -> i + shift, keeping n symbolic.
  Polynomial2 shift_i(std::int64_t shift) const;

  /// Substitutes a concrete n, yielding a polynomial in i alone (returned
  /// with deg_n = 0 coefficients only).
  Polynomial2 substitute_n(std::int64_t n) const;

  bool is_zero() const;
  bool operator==(const Polynomial2& rhs) const;

  /// Coefficient of i^deg_i n^deg_n (zero when absent).
  mpz_class coefficient(int deg_i, int deg_n) const;

 private:
  // coefficients_[a][b] multiplies i^a n^b; trailing zero rows trimmed.
  std::vector<std::vector<mpz_class>> coefficients_;
  void trim();
};

/// Telescoping certificate a(i) x(i+1) - b(i-1) x(i) = c(i) for the term
/// ratio t_{i+1}/t_i = (a(i)/b(i)) (c(i+1)/c(i)).
struct HypergeometricCertificate {
  Polynomial2 a;
  Polynomial2 b;
  Polynomial2 c;
  Polynomial2 x;

  /// The Gosper relation as a polynomial identity in both i and n.
  bool holds_symbolically() const;

  /// The same identity with n fixed, coefficient-wise in i.
  bool holds_at(std::int64_t n) const;
};

/// The certificate used to telescope S_k: a(i) = 2(2+i-n), b(i) = 5+i-2n,
/// c(i) = i, x(i) = 1.
HypergeometricCertificate telescoping_certificate();

/// Checks the certificate identity coefficient-wise in i at concrete n.
bool verify_certificate(std::int64_t n);

/// Summand t_i = i 2^(i+1) (2n-i-5)!/(n-i-2)! of the telescoped sum,
/// defined for 1 <= i <= n-3.
BigCount hypergeometric_term(std::int64_t n, std::int64_t i);

/// Exact check of the printed term ratio: t_{i+1} i (5+i-2n) equals
/// t_i 2 (1+i) (2+i-n) for the concrete values.
bool term_ratio_check(std::int64_t n, std::int64_t i);

/// Closed form of S_k = sum_{i=1}^{k-1} t_i:
/// (4+k-2n) 2^(k+1) (2n-k-5)!/(n-k-2)! + 4(2n-5)!/(n-3)!, for 2 <= k <= n-2.
BigCount s_k_closed(std::int64_t n, std::int64_t k);

/// Literal summation of the t_i with exact arithmetic; the oracle for the
/// closed form. S_1 = 0 is out of range here and left to the caller.
BigCount s_k_direct(std::int64_t n, std::int64_t k);

}  // namespace phylodist
