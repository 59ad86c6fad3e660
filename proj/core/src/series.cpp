#include "phylodist/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace phylodist {

namespace {

const BigRatio kZero{};

void require_order(int order) {
  if (order < 0) {
    throw std::domain_error("series order must be non-negative, got " +
                            std::to_string(order));
  }
}

int valuation(const PowerSeries& s) {
  for (int i = 0; i <= s.order(); ++i) {
    if (!(s.coefficient(i) == kZero)) {
      return i;
    }
  }
  return s.order() + 1;
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  require_order(order);
  coefficients_.assign(static_cast<std::size_t>(order) + 1, BigRatio());
}

PowerSeries::PowerSeries(int order, std::vector<BigRatio> coefficients)
    : coefficients_(std::move(coefficients)) {
  require_order(order);
  coefficients_.resize(static_cast<std::size_t>(order) + 1, BigRatio());
}

const BigRatio& PowerSeries::coefficient(int i) const {
  if (i < 0) {
    throw std::domain_error("series degree must be non-negative");
  }
  if (i >= static_cast<int>(coefficients_.size())) {
    return kZero;
  }
  return coefficients_[static_cast<std::size_t>(i)];
}

void PowerSeries::set_coefficient(int i, BigRatio value) {
  if (i < 0 || i > order()) {
    throw std::domain_error("series degree out of range");
  }
  coefficients_[static_cast<std::size_t>(i)] = std::move(value);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order() > order()) {
    coefficients_.resize(static_cast<std::size_t>(rhs.order()) + 1, BigRatio());
  }
  for (int i = 0; i <= rhs.order(); ++i) {
    coefficients_[static_cast<std::size_t>(i)] += rhs.coefficient(i);
  }
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  if (rhs.order() > order()) {
    coefficients_.resize(static_cast<std::size_t>(rhs.order()) + 1, BigRatio());
  }
  for (int i = 0; i <= rhs.order(); ++i) {
    coefficients_[static_cast<std::size_t>(i)] -= rhs.coefficient(i);
  }
  return *this;
}

PowerSeries PowerSeries::multiply(const PowerSeries& lhs, const PowerSeries& rhs,
                                  int order) {
  require_order(order);
  PowerSeries out(order);
  const int vl = valuation(lhs);
  const int vr = valuation(rhs);
  for (int k = vl + vr; k <= order; ++k) {
    BigRatio acc;
    const int j_lo = std::max(vl, k - rhs.order());
    const int j_hi = std::min(lhs.order(), k - vr);
    for (int j = j_lo; j <= j_hi; ++j) {
      const BigRatio& a = lhs.coefficient(j);
      if (a == kZero) {
        continue;
      }
      acc += a * rhs.coefficient(k - j);
    }
    out.set_coefficient(k, std::move(acc));
  }
  return out;
}

PowerSeries b_series(int order) {
  if (order < 1) {
    throw std::domain_error("b_series needs order >= 1, got " +
                            std::to_string(order));
  }
  // B = x + B^2/2 pins every coefficient: b_1 = 1 and
  // b_m = (1/2) sum_{j=1}^{m-1} b_j b_{m-j}.
  PowerSeries b(order);
  b.set_coefficient(1, BigRatio(1));
  const BigRatio half(1, 2);
  for (int m = 2; m <= order; ++m) {
    BigRatio acc;
    for (int j = 1; j < m; ++j) {
      acc += b.coefficient(j) * b.coefficient(m - j);
    }
    b.set_coefficient(m, acc * half);
  }
  return b;
}

PowerSeries series_power(const PowerSeries& s, std::int64_t e, int order) {
  if (e < 0) {
    throw std::domain_error("series exponent must be non-negative");
  }
  if (order > s.order()) {
    throw std::domain_error("power order exceeds the operand's order");
  }
  require_order(order);
  PowerSeries result(order);
  result.set_coefficient(0, BigRatio(1));
  if (e == 0) {
    return result;
  }
  PowerSeries base(order);
  for (int i = 0; i <= order; ++i) {
    base.set_coefficient(i, s.coefficient(i));
  }
  std::int64_t remaining = e;
  while (true) {
    if (remaining & 1) {
      result = PowerSeries::multiply(result, base, order);
    }
    remaining >>= 1;
    if (remaining == 0) {
      break;
    }
    base = PowerSeries::multiply(base, base, order);
  }
  return result;
}

BigCount c_via_series(std::int64_t n, std::int64_t i) {
  if (n < 3) {
    throw std::domain_error("c_via_series needs n >= 3, got " + std::to_string(n));
  }
  if (i < 1 || i > n - 1) {
    throw std::domain_error("distance must lie in [1, n-1], got " +
                            std::to_string(i));
  }
  const int order = static_cast<int>(n - 2);
  const PowerSeries b = b_series(order);
  const PowerSeries p = series_power(b, i - 1, order);
  const BigRatio value = BigRatio(factorial(n - 2)) * p.coefficient(order);
  if (!value.is_integer() || value < BigRatio(0)) {
    throw std::logic_error("series coefficient route produced a non-count at n=" +
                           std::to_string(n) + ", i=" + std::to_string(i));
  }
  return BigCount(value.numerator());
}

// ---------------------------------------------------------------------------
// Bivariate polynomials and the telescoping certificate
// ---------------------------------------------------------------------------

void Polynomial2::trim() {
  for (auto& row : coefficients_) {
    while (!row.empty() && row.back() == 0) {
      row.pop_back();
    }
  }
  while (!coefficients_.empty() && coefficients_.back().empty()) {
    coefficients_.pop_back();
  }
}

Polynomial2 Polynomial2::term(mpz_class c, int deg_i, int deg_n) {
  if (deg_i < 0 || deg_n < 0) {
    throw std::domain_error("polynomial degrees must be non-negative");
  }
  Polynomial2 p;
  if (c == 0) {
    return p;
  }
  p.coefficients_.resize(static_cast<std::size_t>(deg_i) + 1);
  p.coefficients_[static_cast<std::size_t>(deg_i)].resize(
      static_cast<std::size_t>(deg_n) + 1, mpz_class(0));
  p.coefficients_[static_cast<std::size_t>(deg_i)][static_cast<std::size_t>(deg_n)] =
      std::move(c);
  return p;
}

mpz_class Polynomial2::coefficient(int deg_i, int deg_n) const {
  if (deg_i < 0 || deg_n < 0 ||
      deg_i >= static_cast<int>(coefficients_.size()) ||
      deg_n >= static_cast<int>(coefficients_[static_cast<std::size_t>(deg_i)].size())) {
    return mpz_class(0);
  }
  return coefficients_[static_cast<std::size_t>(deg_i)][static_cast<std::size_t>(deg_n)];
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t a = 0; a < rhs.coefficients_.size(); ++a) {
    auto& row = coefficients_[a];
    const auto& other = rhs.coefficients_[a];
    if (other.size() > row.size()) {
      row.resize(other.size(), mpz_class(0));
    }
    for (std::size_t b = 0; b < other.size(); ++b) {
      row[b] += other[b];
    }
  }
  trim();
  return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t a = 0; a < rhs.coefficients_.size(); ++a) {
    auto& row = coefficients_[a];
    const auto& other = rhs.coefficients_[a];
    if (other.size() > row.size()) {
      row.resize(other.size(), mpz_class(0));
    }
    for (std::size_t b = 0; b < other.size(); ++b) {
      row[b] -= other[b];
    }
  }
  trim();
  return *this;
}

Polynomial2 operator*(const Polynomial2& lhs, const Polynomial2& rhs) {
  Polynomial2 out;
  for (std::size_t a = 0; a < lhs.coefficients_.size(); ++a) {
    for (std::size_t b = 0; b < lhs.coefficients_[a].size(); ++b) {
      if (lhs.coefficients_[a][b] == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.coefficients_.size(); ++c) {
        for (std::size_t d = 0; d < rhs.coefficients_[c].size(); ++d) {
          if (rhs.coefficients_[c][d] == 0) {
            continue;
          }
          out += Polynomial2::term(lhs.coefficients_[a][b] * rhs.coefficients_[c][d],
                                   static_cast<int>(a + c), static_cast<int>(b + d));
        }
      }
    }
  }
  return out;
}

Polynomial2 Polynomial2::shift_i(std::int64_t shift) const {
  const mpz_class s(static_cast<long>(shift));
  Polynomial2 out;
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    for (std::size_t b = 0; b < coefficients_[a].size(); ++b) {
      if (coefficients_[a][b] == 0) {
        continue;
      }
      // (i + s)^a expanded binomially.
      mpz_class s_power(1);
      for (std::size_t t = 0; t <= a; ++t) {
        const std::size_t i_deg = a - t;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a),
                     static_cast<unsigned long>(t));
        out += term(coefficients_[a][b] * binom * s_power, static_cast<int>(i_deg),
                    static_cast<int>(b));
        s_power *= s;
      }
    }
  }
  return out;
}

Polynomial2 Polynomial2::substitute_n(std::int64_t n) const {
  const mpz_class nv(static_cast<long>(n));
  Polynomial2 out;
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    mpz_class n_power(1);
    for (std::size_t b = 0; b < coefficients_[a].size(); ++b) {
      if (coefficients_[a][b] != 0) {
        out += term(coefficients_[a][b] * n_power, static_cast<int>(a), 0);
      }
      n_power *= nv;
    }
  }
  return out;
}

bool Polynomial2::is_zero() const { return coefficients_.empty(); }

bool Polynomial2::operator==(const Polynomial2& rhs) const {
  Polynomial2 diff = *this;
  diff -= rhs;
  return diff.is_zero();
}

bool HypergeometricCertificate::holds_symbolically() const {
  return a * x.shift_i(1) - b.shift_i(-1) * x == c;
}

bool HypergeometricCertificate::holds_at(std::int64_t n) const {
  const HypergeometricCertificate fixed{a.substitute_n(n), b.substitute_n(n),
                                        c.substitute_n(n), x.substitute_n(n)};
  return fixed.holds_symbolically();
}

HypergeometricCertificate telescoping_certificate() {
  const Polynomial2 i = Polynomial2::var_i();
  const Polynomial2 n = Polynomial2::var_n();
  return HypergeometricCertificate{
      (Polynomial2::constant(2) + i - n) * Polynomial2::constant(2),  // 2(2+i-n)
      Polynomial2::constant(5) + i - n * Polynomial2::constant(2),    // 5+i-2n
      i,                                                              // i
      Polynomial2::constant(1),                                       // 1
  };
}

bool verify_certificate(std::int64_t n) { return telescoping_certificate().holds_at(n); }

// ---------------------------------------------------------------------------
// Telescoped sum S_k and its summand
// ---------------------------------------------------------------------------

namespace {

void require_term_index(std::int64_t n, std::int64_t i) {
  if (n < 3 || i < 1 || i > n - 2) {
    throw std::domain_error("hypergeometric term needs 1 <= i <= n-2, got i=" +
                            std::to_string(i) + ", n=" + std::to_string(n));
  }
}

void require_sum_index(std::int64_t n, std::int64_t k) {
  if (n < 4) {
    throw std::domain_error("telescoped sum needs n >= 4, got " + std::to_string(n));
  }
  if (k < 2 || k > n - 2) {
    throw std::domain_error("telescoped sum needs 2 <= k <= n-2, got k=" +
                            std::to_string(k) + " for n=" + std::to_string(n));
  }
}

}  // namespace

BigCount hypergeometric_term(std::int64_t n, std::int64_t i) {
  require_term_index(n, i);
  mpz_class t = factorial_quotient(2 * n - i - 5, n - i - 2).value();
  t *= i;
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(i + 1));
  return BigCount(std::move(t));
}

bool term_ratio_check(std::int64_t n, std::int64_t i) {
  if (n < 4 || i < 1 || i > n - 3) {
    throw std::domain_error("term ratio needs 1 <= i <= n-3, got i=" +
                            std::to_string(i) + ", n=" + std::to_string(n));
  }
  const mpz_class ti = hypergeometric_term(n, i).value();
  const mpz_class ti1 = hypergeometric_term(n, i + 1).value();
  const mpz_class lhs = ti1 * i * (5 + i - 2 * n);
  const mpz_class rhs = ti * 2 * (1 + i) * (2 + i - n);
  return lhs == rhs;
}

BigCount s_k_closed(std::int64_t n, std::int64_t k) {
  require_sum_index(n, k);
  mpz_class boundary = factorial_quotient(2 * n - k - 5, n - k - 2).value();
  mpz_mul_2exp(boundary.get_mpz_t(), boundary.get_mpz_t(),
               static_cast<mp_bitcnt_t>(k + 1));
  boundary *= 4 + k - 2 * n;  // negative for every k in range
  const mpz_class g = 4 * factorial_quotient(2 * n - 5, n - 3).value();
  mpz_class total = boundary + g;
  if (total < 0) {
    throw std::logic_error("telescoped closed form went negative at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  }
  return BigCount(std::move(total));
}

BigCount s_k_direct(std::int64_t n, std::int64_t k) {
  require_sum_index(n, k);
  // Sums t_1 .. t_{k-1}, advancing the term by the exact ratio
  // t_{i+1}/t_i = 2(1+i)(n-2-i) / (i(2n-5-i)) and re-deriving the last
  // term from the factorial formula as a self-check.
  mpz_class term = hypergeometric_term(n, 1).value();
  mpz_class sum = term;
  for (std::int64_t i = 1; i + 1 <= k - 1; ++i) {
    term *= 2 * (i + 1) * (n - 2 - i);
    const unsigned long den =
        static_cast<unsigned long>(i) * static_cast<unsigned long>(2 * n - 5 - i);
    if (!mpz_divisible_ui_p(term.get_mpz_t(), den)) {
      throw std::logic_error("term ratio update is not integral at n=" +
                             std::to_string(n) + ", i=" + std::to_string(i));
    }
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), den);
    sum += term;
  }
  if (k >= 3 && term != hypergeometric_term(n, k - 1).value()) {
    throw std::logic_error("term recurrence diverged from the factorial form");
  }
  return BigCount(std::move(sum));
}

}  // namespace phylodist
