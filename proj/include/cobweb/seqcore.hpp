#pragma once

// Fibonacci numbers, F-factorials, F-falling factorials, Fibonomial
// coefficients and Gaussian (q-binomial) polynomials, all in exact integers.
//
// Indexing: F_0 = 0, F_1 = F_2 = 1. Level s of the cobweb poset has F_s
// vertices, so this convention is shared by every other header.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/nat.hpp"

namespace cobweb {

namespace detail {

// Growable memo shared by all threads. Values are returned by copy so that a
// later growth of the vector never invalidates what a caller holds.
class FibCache {
 public:
  static FibCache& instance() {
    static FibCache cache;
    return cache;
  }

  Nat fib(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < fib_.size()) return fib_[n];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return fib_[n];
  }

  Nat factorial(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < factorial_.size()) return factorial_[n];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return factorial_[n];
  }

 private:
  FibCache() : fib_{Nat(0), Nat(1)}, factorial_{Nat(1), Nat(1)} {}

  // Caller holds the unique lock.
  void grow(std::size_t n) {
    while (fib_.size() <= n) {
      const std::size_t i = fib_.size();
      fib_.push_back(fib_[i - 1] + fib_[i - 2]);
      factorial_.push_back(factorial_[i - 1] * fib_[i]);
    }
  }

  std::shared_mutex mutex_;
  std::vector<Nat> fib_;
  std::vector<Nat> factorial_;
};

}  // namespace detail

/// F_n with F_0 = 0, F_1 = 1.
inline Nat fib(std::size_t n) { return detail::FibCache::instance().fib(n); }

/// Fibonacci numbers extended to negative indices, F_{-n} = (-1)^{n+1} F_n.
inline Int fib_signed(std::int64_t n) {
  if (n >= 0) return fib(static_cast<std::size_t>(n));
  const auto magnitude = static_cast<std::size_t>(-n);
  Int value = fib(magnitude);
  return magnitude % 2 == 0 ? Int(-value) : value;
}

/// F_1 F_2 ... F_n; the empty product 1 for n = 0.
inline Nat f_factorial(std::size_t n) { return detail::FibCache::instance().factorial(n); }

/// F_n F_{n-1} ... F_{n-k+1}.
inline Nat f_falling(std::size_t n, std::size_t k) {
  if (k > n) {
    throw std::invalid_argument("f_falling: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n));
  }
  Nat product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= fib(n - i);
  return product;
}

/// Fibonomial coefficient (n k)_F, zero when k > n.
inline Nat fibonomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return exact_div(f_falling(n, k), f_factorial(k));
}

enum class RecurrenceVariant {
  A,  // (n+1 k) = F_{k-1} (n k) + F_{n-k+2} (n k-1)
  B,  // (n+1 k) = F_{k+1} (n k) + F_{n-k}   (n k-1)
};

/// (n k)_F from the row recurrence alone, seeded with (m 0) = 1 and
/// (0 j) = 0 for j > 0. Coefficients at negative Fibonacci indices (variant B
/// at k = n+1) use fib_signed.
inline Nat fibonomial_rec(std::size_t n, std::size_t k, RecurrenceVariant variant) {
  std::vector<Int> row(k + 1, Int(0));
  row[0] = 1;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Int> next(k + 1, Int(0));
    next[0] = 1;
    const auto tt = static_cast<std::int64_t>(t);
    for (std::size_t j = 1; j <= k; ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      if (variant == RecurrenceVariant::A) {
        next[j] = fib_signed(jj - 1) * row[j] + fib_signed(tt - jj + 2) * row[j - 1];
      } else {
        next[j] = fib_signed(jj + 1) * row[j] + fib_signed(tt - jj) * row[j - 1];
      }
    }
    row = std::move(next);
  }
  if (row[k] < 0) throw std::logic_error("fibonomial_rec: negative coefficient");
  return row[k];
}

// ---------------------------------------------------------------------------
// IntPolynomial

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients; zero polynomial has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
  }
  static IntPolynomial constant(Int c) { return IntPolynomial(std::vector<Int>{std::move(c)}); }
  /// c q^power
  static IntPolynomial monomial(Int c, std::size_t power) {
    std::vector<Int> v(power + 1, Int(0));
    v[power] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  /// Coefficient of q^power, zero beyond the degree.
  Int operator[](std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Int(0);
  }

  Int evaluate(const Int& q) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  /// Long division over Z. Every step must divide the leading coefficient
  /// exactly; otherwise the quotient is not integral and logic_error is thrown.
  friend std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& numerator,
                                                        const IntPolynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("IntPolynomial: division by zero");
    std::vector<Int> rem = numerator.coeffs_;
    const std::size_t dsize = divisor.coeffs_.size();
    if (rem.size() < dsize) return {IntPolynomial{}, numerator};
    std::vector<Int> quot(rem.size() - dsize + 1, Int(0));
    const Int& lead = divisor.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
      const Int& top = rem[i + dsize - 1];
      if (top == 0) continue;
      Int q;
      Int r;
      boost::multiprecision::divide_qr(top, lead, q, r);
      if (r != 0) throw std::logic_error("IntPolynomial: non-integral quotient");
      quot[i] = q;
      for (std::size_t j = 0; j < dsize; ++j) rem[i + j] -= q * divisor.coeffs_[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "1 + q + 2q^2"; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      const Int mag = abs(c);
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) out << mag;
      if (i >= 1) out << 'q';
      if (i >= 2) out << '^' << i;
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

/// Gaussian polynomial prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i), built as one
/// numerator and one denominator product followed by an exact division.
inline IntPolynomial q_binomial(std::size_t n, std::size_t k) {
  if (k > n) return {};
  const auto one = IntPolynomial::constant(1);
  IntPolynomial numerator = one;
  IntPolynomial denominator = one;
  for (std::size_t i = 1; i <= k; ++i) {
    numerator = numerator * (one - IntPolynomial::monomial(1, n - k + i));
    denominator = denominator * (one - IntPolynomial::monomial(1, i));
  }
  auto [quotient, remainder] = divmod(numerator, denominator);
  if (!remainder.is_zero()) throw std::logic_error("q_binomial: inexact division");
  return quotient;
}

}  // namespace cobweb
