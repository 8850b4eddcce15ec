#pragma once

// Fibonomials as sums of binomial determinants. For R = {r_1 < ... < r_k}
// in {0..n},
//   N(R) = det( binomial(r_i, n - r_{k+1-j}) )_{i,j=1..k}
// counts nonintersecting k-tuples of lattice paths, and summing N(R) over all
// k-subsets R gives (n+1 k)_F.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/nat.hpp"

namespace cobweb {

using IntMatrix = std::vector<std::vector<Int>>;

inline Nat binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  Nat value = 1;
  for (std::size_t i = 0; i < b; ++i) value = value * (a - i) / (i + 1);
  return value;
}

class IndexSet {
 public:
  IndexSet(std::vector<std::size_t> r, std::size_t n) : r_(std::move(r)), n_(n) {
    for (std::size_t i = 0; i < r_.size(); ++i) {
      if (r_[i] > n_) throw std::invalid_argument("IndexSet: entry " + std::to_string(r_[i]) + " exceeds n");
      if (i > 0 && r_[i] <= r_[i - 1]) throw std::invalid_argument("IndexSet: entries must increase strictly");
    }
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return r_.size(); }
  std::size_t operator[](std::size_t i) const { return r_[i]; }
  const std::vector<std::size_t>& values() const { return r_; }

 private:
  std::vector<std::size_t> r_;
  std::size_t n_;
};

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
/// all intermediates stay integral; rows are swapped on a zero pivot.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;

  Int sign = 1;
  Int previous_pivot = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && m[swap_row][p] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[p], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / previous_pivot;
      }
      m[i][p] = 0;
    }
    previous_pivot = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

/// The k x k matrix binomial(r_i, n - r_{k+1-j}).
inline IntMatrix path_matrix(const IndexSet& r) {
  const std::size_t k = r.size();
  IntMatrix m(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = binomial(r[i], r.n() - r[k - 1 - j]);
  return m;
}

/// N(R). Signed, so that a negative value is visible to the caller rather than
/// being wrapped into a count.
inline Int n_of_r(const IndexSet& r) { return determinant(path_matrix(r)); }

inline constexpr std::size_t kMaxPathsN = 14;

/// Thrown when some N(R) comes out negative, which would contradict its
/// reading as a path count.
class negative_path_count : public std::logic_error {
 public:
  explicit negative_path_count(const std::string& what) : std::logic_error(what) {}
};

/// sum over k-subsets R of {0..n} of N(R); equals (n+1 k)_F.
inline Nat fibonomial_via_paths(std::size_t n, std::size_t k, Limits limits = Limits::enforced) {
  check_guard(limits, "paths n", n, kMaxPathsN);
  if (k > n + 1) return 0;
  Nat total = 0;
  std::vector<std::size_t> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = i;
  while (true) {
    const IndexSet set(r, n);
    const Int value = n_of_r(set);
    if (value < 0) {
      std::string text;
      for (std::size_t x : r) text += (text.empty() ? "" : ",") + std::to_string(x);
      throw negative_path_count("N(R) < 0 for n = " + std::to_string(n) + ", R = {" + text + "}");
    }
    total += value;
    // next k-subset of {0..n} in lexicographic order
    std::size_t i = k;
    while (i > 0 && r[i - 1] == n + 1 - k + (i - 1)) --i;
    if (i == 0) break;
    ++r[i - 1];
    for (std::size_t j = i; j < k; ++j) r[j] = r[j - 1] + 1;
  }
  return total;
}

}  // namespace cobweb
