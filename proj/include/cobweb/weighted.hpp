#pragma once

// Konvalina's generalized binomial coefficients. With n labeled boxes, box i
// holding w_i distinct objects:
//   C_k^n(w)  picks k objects from k distinct boxes  (elementary symmetric e_k)
//   S_k^n(w)  picks k objects from k boxes, repeats allowed (complete h_k)
// Both satisfy X_k^n = X_k^{n-1} + w_n X_{k-1}^{n-1}; they differ only in the
// boundary and in whether the new box may be reused.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobweb/nat.hpp"

namespace cobweb {

class WeightVector {
 public:
  enum class Order { require_sorted, sort };

  WeightVector() = default;

  explicit WeightVector(std::vector<Nat> weights, Order order = Order::require_sorted)
      : weights_(std::move(weights)) {
    for (const auto& w : weights_) {
      if (w < 1) throw std::invalid_argument("WeightVector: weights must be >= 1, got " + w.str());
    }
    if (order == Order::sort) {
      std::sort(weights_.begin(), weights_.end());
    } else if (!std::is_sorted(weights_.begin(), weights_.end())) {
      throw std::invalid_argument("WeightVector: weights must be nondecreasing");
    }
  }

  static WeightVector from_integers(const std::vector<long long>& ws,
                                    Order order = Order::require_sorted) {
    std::vector<Nat> v;
    v.reserve(ws.size());
    for (long long w : ws) v.emplace_back(w);
    return WeightVector(std::move(v), order);
  }

  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  const Nat& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Nat>& values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Nat> weights_;
};

/// C_k^n(w) by the box-by-box recurrence, C_0 = 1, C_k^0 = 0 for k > 0.
inline Nat c_coeff(const WeightVector& w, std::size_t k) {
  // table[j] holds C_j over the boxes processed so far
  std::vector<Nat> table(k + 1, Nat(0));
  table[0] = 1;
  for (std::size_t box = 0; box < w.size(); ++box) {
    for (std::size_t j = std::min(k, box + 1); j >= 1; --j) table[j] += w[box] * table[j - 1];
  }
  return table[k];
}

/// S_k^n(w) by the same recurrence; the new box may contribute repeatedly.
inline Nat s_coeff(const WeightVector& w, std::size_t k) {
  if (k == 0) return 1;
  if (w.empty()) throw std::invalid_argument("s_coeff: empty weight vector with k >= 1");
  std::vector<Nat> table(k + 1, Nat(0));
  table[0] = 1;
  for (std::size_t box = 0; box < w.size(); ++box) {
    // ascending j: table[j-1] already includes box `box`, which is what allows repeats
    for (std::size_t j = 1; j <= k; ++j) table[j] += w[box] * table[j - 1];
  }
  return table[k];
}

inline constexpr std::size_t kOracleMaxLength = 12;
inline constexpr std::size_t kOracleMaxK = 12;

namespace detail {

inline void check_oracle_size(const WeightVector& w, std::size_t k) {
  if (w.size() > kOracleMaxLength || k > kOracleMaxK) {
    throw guard_exceeded("Konvalina oracle size", std::to_string(kOracleMaxLength) + "/" +
                                                      std::to_string(kOracleMaxK),
                         std::to_string(w.size()) + "/" + std::to_string(k));
  }
}

// Visits every index tuple i_1 <(=) ... <(=) i_k and sums the weight products.
inline Nat enumerate_index_tuples(const WeightVector& w, std::size_t k, bool strictly_increasing) {
  Nat total = 0;
  std::function<void(std::size_t, std::size_t, const Nat&)> visit =
      [&](std::size_t depth, std::size_t first, const Nat& product) {
        if (depth == k) {
          total += product;
          return;
        }
        for (std::size_t i = first; i < w.size(); ++i) {
          visit(depth + 1, strictly_increasing ? i + 1 : i, product * w[i]);
        }
      };
  visit(0, 0, Nat(1));
  return total;
}

}  // namespace detail

/// Brute-force sum over strictly increasing index tuples.
inline Nat c_coeff_oracle(const WeightVector& w, std::size_t k) {
  detail::check_oracle_size(w, k);
  return detail::enumerate_index_tuples(w, k, true);
}

/// Brute-force sum over nondecreasing index tuples.
inline Nat s_coeff_oracle(const WeightVector& w, std::size_t k) {
  detail::check_oracle_size(w, k);
  return detail::enumerate_index_tuples(w, k, false);
}

// Preset weight families recovering the classical triangles.
namespace preset {

/// (1, ..., 1): binomial coefficients.
inline WeightVector ones(std::size_t n) {
  if (n == 0) throw std::invalid_argument("preset ones: n must be >= 1");
  return WeightVector(std::vector<Nat>(n, Nat(1)));
}

/// (1, 2, ..., n): Stirling numbers of both kinds.
inline WeightVector arithmetic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("preset arithmetic: n must be >= 1");
  std::vector<Nat> v;
  for (std::size_t i = 1; i <= n; ++i) v.emplace_back(i);
  return WeightVector(std::move(v));
}

/// (1, q, ..., q^{n-1}): Gaussian coefficients at integer q.
inline WeightVector geometric_q(std::size_t n, const Nat& q) {
  if (n == 0) throw std::invalid_argument("preset geometric_q: n must be >= 1");
  if (q == 0) throw std::invalid_argument("preset geometric_q: q must be >= 1");
  std::vector<Nat> v;
  Nat power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(power);
    power *= q;
  }
  return WeightVector(std::move(v));
}

}  // namespace preset

}  // namespace cobweb
