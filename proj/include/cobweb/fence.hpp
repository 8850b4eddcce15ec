#pragma once

// Order ideals of the fence x_1 < x_2 > x_3 < x_4 > ... and the two
// Fibonacci splitting identities they yield.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cobweb/nat.hpp"
#include "cobweb/seqcore.hpp"

namespace cobweb {

/// The m-element fence starting with an ascent. Covers only join neighbours.
struct FencePoset {
  std::size_t size = 0;

  /// x_{i+1} covers x_i (1-based i < size); otherwise x_i covers x_{i+1}.
  bool ascends_at(std::size_t i) const { return i % 2 == 1; }
};

/// Down-closed subsets of the m-element fence, by a two-state transfer
/// recurrence over the elements: `in` / `out` count ideals of x_1..x_i by
/// whether x_i belongs. Equals F_{m+2}.
inline Nat count_ideals(std::size_t m) {
  if (m == 0) return 1;
  const FencePoset fence{m};
  Nat in = 1;
  Nat out = 1;
  for (std::size_t i = 1; i < m; ++i) {
    Nat next_in;
    Nat next_out;
    if (fence.ascends_at(i)) {
      // x_i < x_{i+1}: x_{i+1} may join only if x_i is in
      next_in = in;
      next_out = in + out;
    } else {
      // x_i > x_{i+1}: x_i in forces x_{i+1} in
      next_in = in + out;
      next_out = out;
    }
    in = std::move(next_in);
    out = std::move(next_out);
  }
  return in + out;
}

inline constexpr std::size_t kMaxFenceOracle = 20;

namespace detail {

// Brute force over all 2^m subsets; `down` selects ideals, otherwise filters.
inline Nat count_closed_subsets(std::size_t m, bool down, Limits limits) {
  check_guard(limits, "fence oracle size", m, kMaxFenceOracle);
  const FencePoset fence{m};
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool closed = true;
    for (std::size_t i = 1; i < m && closed; ++i) {
      const bool lower_in = mask >> (i - 1) & 1;  // x_i
      const bool upper_in = mask >> i & 1;        // x_{i+1}
      const bool smaller_in = fence.ascends_at(i) ? lower_in : upper_in;
      const bool larger_in = fence.ascends_at(i) ? upper_in : lower_in;
      closed = down ? (!larger_in || smaller_in) : (!smaller_in || larger_in);
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace detail

/// Ideals counted by checking every subset for down-closure.
inline Nat count_ideals_oracle(std::size_t m, Limits limits = Limits::enforced) {
  return detail::count_closed_subsets(m, true, limits);
}

/// Filters (up-closed subsets) of the same fence.
inline Nat count_filters_oracle(std::size_t m, Limits limits = Limits::enforced) {
  return detail::count_closed_subsets(m, false, limits);
}

/// F(n) = F(k) F(n+1-k) + F(k-1) F(n-k), and the same with k-1 in place of k.
inline bool beck_identities(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw std::invalid_argument("beck_identities: need 2 <= k <= n");
  const bool first = fib(n) == fib(k) * fib(n + 1 - k) + fib(k - 1) * fib(n - k);
  const bool second = fib(n) == fib(k - 1) * fib(n + 1 - (k - 1)) + fib(k - 2) * fib(n - (k - 1));
  return first && second;
}

}  // namespace cobweb
