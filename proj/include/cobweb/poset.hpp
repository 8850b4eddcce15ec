#pragma once

// The Fibonacci cobweb poset truncated at N levels, its incidence matrices and
// chain counts.
//
// Level s holds F_s vertices <j, s>, 1 <= j <= F_s. The Hasse diagram joins
// every vertex of level s to every vertex of level s+1, so x < y exactly when
// level(x) < level(y); vertices on one level are pairwise incomparable.
// Vertices are linearized level by level, 1-based: level s occupies
// F_{s+1} .. F_{s+2} - 1 because F_1 + ... + F_{s-1} = F_{s+1} - 1. This order
// is a linear extension, so every incidence matrix is upper triangular.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobweb/nat.hpp"
#include "cobweb/seqcore.hpp"

namespace cobweb {

struct VertexCoord {
  std::size_t j = 1;  // position within the level, 1-based
  std::size_t s = 1;  // level, 1-based

  friend auto operator<=>(const VertexCoord&, const VertexCoord&) = default;
};

inline std::string to_string(const VertexCoord& v) {
  return "<" + std::to_string(v.j) + "," + std::to_string(v.s) + ">";
}

// F_{N+2} - 1 must fit in size_t.
inline constexpr std::size_t kMaxLevels = 90;

class CobwebPoset {
 public:
  static CobwebPoset build(std::size_t max_level) {
    if (max_level == 0) throw std::invalid_argument("CobwebPoset::build: N must be >= 1");
    if (max_level > kMaxLevels) {
      throw std::invalid_argument("CobwebPoset::build: N = " + std::to_string(max_level) +
                                  " exceeds " + std::to_string(kMaxLevels));
    }
    CobwebPoset p;
    p.max_level_ = max_level;
    std::size_t offset = 1;
    for (std::size_t s = 1; s <= max_level; ++s) {
      const auto size = fib(s).convert_to<std::size_t>();
      p.level_sizes_.push_back(size);
      p.level_offsets_.push_back(offset);
      offset += size;
    }
    p.vertex_count_ = offset - 1;
    return p;
  }

  std::size_t max_level() const { return max_level_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }
  /// Level populations F_1..F_N, indexed from 0.
  std::size_t level_size(std::size_t s) const { return level_sizes_.at(check_level(s) - 1); }
  /// Linear index of <1, s>.
  std::size_t level_offset(std::size_t s) const { return level_offsets_.at(check_level(s) - 1); }

  bool contains(const VertexCoord& v) const {
    return v.s >= 1 && v.s <= max_level_ && v.j >= 1 && v.j <= level_sizes_[v.s - 1];
  }

  std::size_t linear_index(const VertexCoord& v) const {
    if (!contains(v)) {
      throw std::out_of_range("linear_index: " + to_string(v) + " is not a vertex of P_" +
                              std::to_string(max_level_));
    }
    return level_offsets_[v.s - 1] + v.j - 1;
  }

  VertexCoord coord_of(std::size_t x) const {
    const std::size_t s = level_of(x);
    return {x - level_offsets_[s - 1] + 1, s};
  }

  std::size_t level_of(std::size_t x) const {
    if (x < 1 || x > vertex_count_) {
      throw std::out_of_range("coord_of: index " + std::to_string(x) + " outside 1.." +
                              std::to_string(vertex_count_));
    }
    const auto it = std::upper_bound(level_offsets_.begin(), level_offsets_.end(), x);
    return static_cast<std::size_t>(it - level_offsets_.begin());
  }

  /// x <= y in the cobweb order.
  bool leq(std::size_t x, std::size_t y) const { return x == y || level_of(x) < level_of(y); }

  /// y covers x: an edge of the Hasse diagram.
  bool covers(std::size_t x, std::size_t y) const { return level_of(y) == level_of(x) + 1; }

 private:
  std::size_t check_level(std::size_t s) const {
    if (s < 1 || s > max_level_) {
      throw std::out_of_range("level " + std::to_string(s) + " outside 1.." +
                              std::to_string(max_level_));
    }
    return s;
  }

  std::size_t max_level_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> level_sizes_;
  std::vector<std::size_t> level_offsets_;
};

// ---------------------------------------------------------------------------
// IncMatrix

/// Dense upper-triangular integer matrix with 1-based indices. Only the upper
/// triangle is stored; entries below the diagonal read as zero and cannot be
/// set to anything else.
class IncMatrix {
 public:
  IncMatrix() = default;
  explicit IncMatrix(std::size_t dim) : dim_(dim), entries_(dim * (dim + 1) / 2, Int(0)) {}

  static IncMatrix identity(std::size_t dim) {
    IncMatrix m(dim);
    for (std::size_t x = 1; x <= dim; ++x) m.set(x, x, 1);
    return m;
  }

  std::size_t dim() const { return dim_; }

  const Int& operator()(std::size_t x, std::size_t y) const {
    check(x, y);
    if (x > y) return zero();
    return entries_[slot(x, y)];
  }

  void set(std::size_t x, std::size_t y, Int value) {
    check(x, y);
    if (x > y) {
      if (value != 0) {
        throw std::invalid_argument("IncMatrix: nonzero entry below the diagonal at (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
      }
      return;
    }
    entries_[slot(x, y)] = std::move(value);
  }

  friend bool operator==(const IncMatrix&, const IncMatrix&) = default;

  friend IncMatrix operator*(const IncMatrix& a, const IncMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("IncMatrix: dimension mismatch");
    IncMatrix c(a.dim_);
    for (std::size_t x = 1; x <= a.dim_; ++x) {
      for (std::size_t z = x; z <= a.dim_; ++z) {
        const Int& left = a.entries_[a.slot(x, z)];
        if (left == 0) continue;
        for (std::size_t y = z; y <= a.dim_; ++y) {
          const Int& right = b.entries_[b.slot(z, y)];
          if (right != 0) c.entries_[c.slot(x, y)] += left * right;
        }
      }
    }
    return c;
  }

  friend IncMatrix operator-(const IncMatrix& a, const IncMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("IncMatrix: dimension mismatch");
    IncMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
    return c;
  }

  friend IncMatrix operator*(const Int& scalar, const IncMatrix& a) {
    IncMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = scalar * a.entries_[i];
    return c;
  }

 private:
  static const Int& zero() {
    static const Int z = 0;
    return z;
  }

  void check(std::size_t x, std::size_t y) const {
    if (x < 1 || y < 1 || x > dim_ || y > dim_) {
      throw std::out_of_range("IncMatrix: (" + std::to_string(x) + "," + std::to_string(y) +
                              ") outside 1.." + std::to_string(dim_));
    }
  }

  // Row x stores columns x..dim contiguously.
  std::size_t slot(std::size_t x, std::size_t y) const {
    const std::size_t row = x - 1;
    return row * dim_ - row * (row - 1) / 2 + (y - x);
  }

  std::size_t dim_ = 0;
  std::vector<Int> entries_;
};

/// Inverse of an upper-triangular matrix with unit diagonal, by
/// back-substitution: M(x,y) = -sum_{x<=z<y} M(x,z) A(z,y).
inline IncMatrix unit_upper_inverse(const IncMatrix& a) {
  const std::size_t n = a.dim();
  for (std::size_t x = 1; x <= n; ++x) {
    if (a(x, x) != 1) throw std::invalid_argument("unit_upper_inverse: diagonal entry is not 1");
  }
  IncMatrix inv(n);
  std::vector<Int> row(n + 1);
  for (std::size_t x = 1; x <= n; ++x) {
    std::fill(row.begin(), row.end(), Int(0));
    row[x] = 1;
    for (std::size_t y = x + 1; y <= n; ++y) {
      Int acc = 0;
      for (std::size_t z = x; z < y; ++z) {
        if (row[z] == 0) continue;
        const Int& entry = a(z, y);
        if (entry != 0) acc += row[z] * entry;
      }
      row[y] = -acc;
    }
    for (std::size_t y = x; y <= n; ++y) inv.set(x, y, row[y]);
  }
  return inv;
}

// Largest matrix built without lifting limits; N = 15 gives 1596.
inline constexpr std::size_t kMaxMatrixDim = 1600;

namespace detail {
inline void check_matrix_guard(const CobwebPoset& p, Limits limits) {
  check_guard(limits, "incidence matrix dimension", p.vertex_count(), kMaxMatrixDim);
}
}  // namespace detail

/// zeta(x,y) = 1 iff x <= y, read off the comparability predicate.
inline IncMatrix zeta_from_order(const CobwebPoset& p, Limits limits = Limits::enforced) {
  detail::check_matrix_guard(p, limits);
  const std::size_t n = p.vertex_count();
  IncMatrix z(n);
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = x; y <= n; ++y)
      if (p.leq(x, y)) z.set(x, y, 1);
  return z;
}

/// zeta = zeta_1 - zeta_0 with
///   zeta_1(x,y) = sum_{k>=0} delta(x+k, y)
///   zeta_0(x,y) = sum_{k>=0} sum_{s>=1} delta(x, F_{s+1}+k)
///                 * sum_{1<=r<=F_s-k-1} delta(k+F_{s+1}+r, y).
/// The delta over x fixes k = x - F_{s+1} for each s with F_{s+1} <= x, and
/// the inner delta then fixes y = x + r. Only terms whose arguments lie inside
/// 1..dim can be nonzero in the finite block, so the infinite sums are cut at
/// F_{s+1} <= dim and y <= dim without changing any entry.
inline IncMatrix zeta_explicit(const CobwebPoset& p, Limits limits = Limits::enforced) {
  detail::check_matrix_guard(p, limits);
  const std::size_t n = p.vertex_count();

  IncMatrix zeta1(n);
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t k = 0; x + k <= n; ++k) zeta1.set(x, x + k, zeta1(x, x + k) + 1);

  IncMatrix zeta0(n);
  for (std::size_t s = 1;; ++s) {
    const std::size_t level_start = fib(s + 1).convert_to<std::size_t>();
    if (level_start > n) break;
    const auto fs = static_cast<std::int64_t>(fib(s).convert_to<std::size_t>());
    for (std::size_t x = level_start; x <= n; ++x) {
      const auto k = static_cast<std::int64_t>(x - level_start);
      for (std::int64_t r = 1; r <= fs - k - 1; ++r) {
        const std::size_t y = x + static_cast<std::size_t>(r);
        if (y > n) break;
        zeta0.set(x, y, zeta0(x, y) + 1);
      }
    }
  }
  return zeta1 - zeta0;
}

/// mu = zeta^{-1}.
inline IncMatrix mobius(const CobwebPoset& p, Limits limits = Limits::enforced) {
  return unit_upper_inverse(zeta_from_order(p, limits));
}

/// Entry (x,y) counts chains x = z_0 < ... < z_t = y of every length:
/// sum_t eta^t = (delta - eta)^{-1} with eta = zeta - delta.
inline IncMatrix chain_count_matrix(const CobwebPoset& p, Limits limits = Limits::enforced) {
  const IncMatrix zeta = zeta_from_order(p, limits);
  const IncMatrix delta = IncMatrix::identity(zeta.dim());
  return unit_upper_inverse(Int(2) * delta - zeta);
}

/// Chains from x to y of every length; 0 when x and y are incomparable.
inline Nat count_all_chains(const CobwebPoset& p, std::size_t x, std::size_t y) {
  p.level_of(x);
  p.level_of(y);
  if (!p.leq(x, y)) return 0;
  // chains[z - x] counts chains from x ending at z
  std::vector<Nat> chains(y - x + 1, Nat(0));
  chains[0] = 1;
  for (std::size_t z = x + 1; z <= y; ++z) {
    if (!p.leq(x, z)) continue;
    Nat acc = 0;
    for (std::size_t w = x; w < z; ++w)
      if (p.leq(w, z) && chains[w - x] != 0) acc += chains[w - x];
    chains[z - x] = acc;
  }
  return chains[y - x];
}

namespace detail {
inline void check_chain_range(const CobwebPoset& p, std::size_t from_level, std::size_t n) {
  if (from_level < 1 || n < from_level || n > p.max_level()) {
    throw std::out_of_range("maximal chains: need 1 <= k <= n <= " +
                            std::to_string(p.max_level()) + ", got k = " +
                            std::to_string(from_level) + ", n = " + std::to_string(n));
  }
}
}  // namespace detail

/// Maximal chains from the root up to level n: n_F!.
inline Nat count_max_chains_from_root(const CobwebPoset& p, std::size_t n) {
  detail::check_chain_range(p, 1, n);
  return f_factorial(n);
}

/// Maximal chains from any vertex of level k up to level n: F_{k+1} ... F_n.
inline Nat count_max_chains_from_vertex(const CobwebPoset& p, const VertexCoord& v,
                                        std::size_t n) {
  if (!p.contains(v)) throw std::out_of_range("count_max_chains: " + to_string(v) + " not in poset");
  detail::check_chain_range(p, v.s, n);
  return f_falling(n, n - v.s);
}

/// Same count by dynamic programming over Hasse edges, level by level.
inline Nat count_max_chains_dp(const CobwebPoset& p, const VertexCoord& v, std::size_t n) {
  if (!p.contains(v)) throw std::out_of_range("count_max_chains: " + to_string(v) + " not in poset");
  detail::check_chain_range(p, v.s, n);
  std::vector<Nat> ways{Nat(1)};
  std::vector<std::size_t> frontier{p.linear_index(v)};
  for (std::size_t level = v.s + 1; level <= n; ++level) {
    std::vector<std::size_t> next;
    std::vector<Nat> next_ways;
    const std::size_t first = p.level_offset(level);
    for (std::size_t y = first; y < first + p.level_size(level); ++y) {
      Nat acc = 0;
      for (std::size_t i = 0; i < frontier.size(); ++i)
        if (p.covers(frontier[i], y)) acc += ways[i];
      next.push_back(y);
      next_ways.push_back(std::move(acc));
    }
    frontier = std::move(next);
    ways = std::move(next_ways);
  }
  Nat total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

using Chain = std::vector<VertexCoord>;

inline constexpr std::size_t kMaxEnumeratedChains = 1'000'000;

/// Every maximal chain from v up to level n, one vertex per level, in
/// lexicographic order of positions. Successors are found through the
/// cover relation, independently of the closed-form counts.
inline std::vector<Chain> enumerate_max_chains(const CobwebPoset& p, const VertexCoord& v,
                                               std::size_t n, Limits limits = Limits::enforced) {
  if (!p.contains(v)) throw std::out_of_range("enumerate_max_chains: " + to_string(v) + " not in poset");
  detail::check_chain_range(p, v.s, n);
  check_guard(limits, "maximal chain count", f_falling(n, n - v.s), kMaxEnumeratedChains);

  std::vector<Chain> out;
  Chain current{v};
  std::function<void(std::size_t)> extend = [&](std::size_t x) {
    const std::size_t level = p.level_of(x);
    if (level == n) {
      out.push_back(current);
      return;
    }
    const std::size_t first = p.level_offset(level + 1);
    for (std::size_t y = first; y < first + p.level_size(level + 1); ++y) {
      if (!p.covers(x, y)) continue;
      current.push_back(p.coord_of(y));
      extend(y);
      current.pop_back();
    }
  };
  extend(p.linear_index(v));
  return out;
}

}  // namespace cobweb
