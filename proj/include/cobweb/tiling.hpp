#pragma once

// Shifted copies P_m(k)_r of the prototype cobweb P_m and max-disjoint
// tilings of the maximal chains above a fixed root.
//
// Fix a root <r, k>. A maximal chain from the root to level n = k+m picks one
// vertex on each level k+1..k+m, so the chain universe is the product of those
// levels and has F_{k+1} ... F_{k+m} members whatever r is. A copy chooses a
// subset of every level and owns the product of its subsets; two copies are
// max-disjoint when these chain families do not meet. A tiling is a set of
// copies whose families partition the universe, i.e. an exact cover.
//
// CopyModel::literal puts F_s vertices on level k+s (the prototype's own level
// sizes). CopyModel::level_permuted lets the sizes F_1..F_m land on the levels
// in any order that fits the level populations; such blocks have the same
// number of maximal chains as P_m but are not isomorphic to it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobweb/exact_cover.hpp"
#include "cobweb/nat.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"

namespace cobweb {

enum class CopyModel { literal, level_permuted };

inline const char* to_string(CopyModel model) {
  return model == CopyModel::literal ? "literal" : "level_permuted";
}

/// Positions, one per level k+1..k+m; the root is implicit.
using ChainTuple = std::vector<std::size_t>;

struct CopySpec {
  VertexCoord root;                              // <r, k>
  std::vector<std::vector<std::size_t>> chosen;  // chosen[s-1]: sorted positions on level k+s

  std::size_t height() const { return chosen.size(); }
  friend bool operator==(const CopySpec&, const CopySpec&) = default;
};

struct TilingSolution {
  VertexCoord root;
  std::size_t height = 0;
  CopyModel model = CopyModel::literal;
  std::vector<CopySpec> copies;
  /// cover[i] is the copy owning the i-th chain of the universe (mixed-radix rank).
  std::vector<std::size_t> cover;
};

inline constexpr std::size_t kMaxCopyCandidates = 100'000;
inline constexpr std::size_t kMaxChainUniverse = 10'000;
inline constexpr std::size_t kMaxCountAllUniverse = 30;

/// Maximal chains from a root on level k up to level k+m, ranked in
/// lexicographic (mixed-radix) order.
class ChainUniverse {
 public:
  ChainUniverse(std::size_t k, std::size_t m) {
    for (std::size_t s = 1; s <= m; ++s) radix_.push_back(fib(k + s).convert_to<std::size_t>());
  }

  std::size_t height() const { return radix_.size(); }
  const std::vector<std::size_t>& level_sizes() const { return radix_; }

  Nat size() const {
    Nat total = 1;
    for (auto r : radix_) total *= r;
    return total;
  }

  std::size_t rank(const ChainTuple& chain) const {
    if (chain.size() != radix_.size()) throw std::invalid_argument("ChainUniverse: wrong chain length");
    std::size_t value = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      if (chain[i] < 1 || chain[i] > radix_[i]) throw std::out_of_range("ChainUniverse: position out of range");
      value = value * radix_[i] + (chain[i] - 1);
    }
    return value;
  }

  ChainTuple unrank(std::size_t value) const {
    ChainTuple chain(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      chain[i] = value % radix_[i] + 1;
      value /= radix_[i];
    }
    return chain;
  }

 private:
  std::vector<std::size_t> radix_;
};

namespace detail {

inline std::size_t fib_size(std::size_t n) { return fib(n).convert_to<std::size_t>(); }

inline void check_root(std::size_t k, std::size_t r) {
  if (k < 1) throw std::invalid_argument("copy root level k must be >= 1");
  if (r < 1 || Nat(r) > fib(k)) {
    throw std::invalid_argument("copy root position r = " + std::to_string(r) + " outside 1.." +
                                fib(k).str());
  }
}

inline Nat binomial_nat(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  Nat value = 1;
  for (std::size_t i = 0; i < b; ++i) value = value * (a - i) / (i + 1);
  return value;
}

// Level-size assignments (one per level k+1..k+m) allowed by the model, in
// lexicographic order. Shapes that do not fit the level populations are
// dropped.
inline std::vector<std::vector<std::size_t>> copy_shapes(std::size_t k, std::size_t m,
                                                         CopyModel model) {
  std::vector<std::size_t> shape;
  for (std::size_t s = 1; s <= m; ++s) shape.push_back(fib_size(s));
  std::vector<std::vector<std::size_t>> shapes;
  auto fits = [&](const std::vector<std::size_t>& candidate) {
    for (std::size_t s = 1; s <= m; ++s)
      if (candidate[s - 1] > fib_size(k + s)) return false;
    return true;
  };
  if (model == CopyModel::literal) {
    if (fits(shape)) shapes.push_back(shape);
    return shapes;
  }
  std::sort(shape.begin(), shape.end());
  do {
    if (fits(shape)) shapes.push_back(shape);
  } while (std::next_permutation(shape.begin(), shape.end()));
  return shapes;
}

// Lexicographic c-subsets of {1..n}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t c) {
  std::vector<std::vector<std::size_t>> out;
  if (c > n) return out;
  std::vector<std::size_t> current(c);
  std::iota(current.begin(), current.end(), std::size_t{1});
  while (true) {
    out.push_back(current);
    std::size_t i = c;
    while (i > 0 && current[i - 1] == n - c + i) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < c; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace detail

/// Number of candidate copies enumerate_copies would produce.
inline Nat copy_candidate_count(std::size_t k, std::size_t m, CopyModel model = CopyModel::literal) {
  Nat total = 0;
  for (const auto& shape : detail::copy_shapes(k, m, model)) {
    Nat product = 1;
    for (std::size_t s = 1; s <= m; ++s) product *= detail::binomial_nat(detail::fib_size(k + s), shape[s - 1]);
    total += product;
  }
  return total;
}

/// All copies rooted at <r, k> of height m, lexicographic by shape and then
/// by the chosen subsets level by level.
inline std::vector<CopySpec> enumerate_copies(std::size_t k, std::size_t r, std::size_t m,
                                              CopyModel model = CopyModel::literal,
                                              Limits limits = Limits::enforced) {
  detail::check_root(k, r);
  check_guard(limits, "copy candidate count", copy_candidate_count(k, m, model), kMaxCopyCandidates);

  std::vector<CopySpec> out;
  for (const auto& shape : detail::copy_shapes(k, m, model)) {
    std::vector<std::vector<std::vector<std::size_t>>> per_level;
    for (std::size_t s = 1; s <= m; ++s) per_level.push_back(detail::subsets(detail::fib_size(k + s), shape[s - 1]));

    std::vector<std::size_t> index(m, 0);
    while (true) {
      CopySpec copy{{r, k}, {}};
      for (std::size_t s = 0; s < m; ++s) copy.chosen.push_back(per_level[s][index[s]]);
      out.push_back(std::move(copy));
      std::size_t s = m;
      while (s > 0 && ++index[s - 1] == per_level[s - 1].size()) index[--s] = 0;
      if (s == 0) break;
    }
  }
  return out;
}

/// Maximal chains owned by a copy: the product of its chosen subsets.
inline std::vector<ChainTuple> chains_of_copy(const CopySpec& copy) {
  std::vector<ChainTuple> out;
  const std::size_t m = copy.height();
  for (const auto& level : copy.chosen)
    if (level.empty()) return out;
  std::vector<std::size_t> index(m, 0);
  while (true) {
    ChainTuple chain(m);
    for (std::size_t s = 0; s < m; ++s) chain[s] = copy.chosen[s][index[s]];
    out.push_back(std::move(chain));
    std::size_t s = m;
    while (s > 0 && ++index[s - 1] == copy.chosen[s - 1].size()) index[--s] = 0;
    if (s == 0) break;
  }
  return out;
}

/// n_F! / k_F! = (n k)_F * (n-k)_F!, i.e. [Phi_1 -> Phi_n] / [Phi_1 -> Phi_k]
/// equals the copy count times the chains per copy of height n-k.
inline bool ratio_identity(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("ratio_identity: need 0 < k <= n");
  Nat quotient;
  Nat remainder;
  boost::multiprecision::divide_qr(f_factorial(n), f_factorial(k), quotient, remainder);
  return remainder == 0 && quotient == fibonomial(n, k) * f_factorial(n - k);
}

/// Both row recurrences for (n+1 k)_F and the symmetry rewrite
/// F_{n-k} (n k-1)_F = F_{n-k} (n n-k+1)_F of the second class.
inline bool recurrence_decomposition_check(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("recurrence_decomposition_check: need 0 < k <= n");
  const Nat total = fibonomial(n + 1, k);
  const Nat same_level = fibonomial(n, k);
  const Nat lower_level = fibonomial(n, k - 1);
  const bool variant_b = total == fib(k + 1) * same_level + fib(n - k) * lower_level;
  const bool variant_a = total == fib(k - 1) * same_level + fib(n - k + 2) * lower_level;
  const bool rewrite = fib(n - k) * lower_level == fib(n - k) * fibonomial(n, n - k + 1);
  return variant_a && variant_b && rewrite;
}

/// Literal copies can only tile if F_s divides F_{k+s} on every level: fixing
/// the other coordinates leaves a fiber of F_{k+s} chains that the copies'
/// level-(k+s) subsets, all of size F_s, must partition. Returns the first
/// level offset s that fails, if any.
inline std::optional<std::size_t> literal_tiling_obstruction(std::size_t k, std::size_t m) {
  for (std::size_t s = 1; s <= m; ++s) {
    if (fib(k + s) % fib(s) != 0) return s;
  }
  return std::nullopt;
}

namespace detail {

struct CoverProblem {
  ChainUniverse universe;
  std::vector<CopySpec> candidates;
  ExactCover solver;
};

inline CoverProblem build_cover_problem(std::size_t k, std::size_t r, std::size_t m,
                                        CopyModel model, Limits limits, std::size_t universe_limit) {
  detail::check_root(k, r);
  ChainUniverse universe(k, m);
  check_guard(limits, "chain universe size", universe.size(), universe_limit);
  auto candidates = enumerate_copies(k, r, m, model, limits);
  ExactCover solver(universe.size().convert_to<std::size_t>());
  std::vector<std::size_t> columns;
  for (const auto& copy : candidates) {
    columns.clear();
    for (const auto& chain : chains_of_copy(copy)) columns.push_back(universe.rank(chain));
    solver.add_row(columns);
  }
  return {std::move(universe), std::move(candidates), std::move(solver)};
}

}  // namespace detail

/// First max-disjoint tiling found by the exact-cover search, or nullopt when
/// the search space holds none. Any solution has exactly (k+m m)_F copies,
/// since each copy owns m_F! chains of the F_{k+1}...F_{k+m} in the universe.
inline std::optional<TilingSolution> find_tiling(std::size_t k, std::size_t r, std::size_t m,
                                                 CopyModel model = CopyModel::literal,
                                                 Limits limits = Limits::enforced) {
  auto problem = detail::build_cover_problem(k, r, m, model, limits, kMaxChainUniverse);
  const auto rows = problem.solver.solve_first();
  if (!rows) return std::nullopt;

  TilingSolution solution;
  solution.root = {r, k};
  solution.height = m;
  solution.model = model;
  solution.cover.assign(problem.universe.size().convert_to<std::size_t>(), 0);
  std::vector<std::size_t> sorted_rows = *rows;
  std::sort(sorted_rows.begin(), sorted_rows.end());
  for (std::size_t row : sorted_rows) {
    const std::size_t copy_index = solution.copies.size();
    solution.copies.push_back(problem.candidates[row]);
    for (const auto& chain : chains_of_copy(problem.candidates[row]))
      solution.cover[problem.universe.rank(chain)] = copy_index;
  }
  return solution;
}

/// Number of distinct tilings. Only for tiny universes, since cover counts
/// explode.
inline std::uint64_t count_tilings(std::size_t k, std::size_t r, std::size_t m,
                                   CopyModel model = CopyModel::literal,
                                   Limits limits = Limits::enforced) {
  auto problem = detail::build_cover_problem(k, r, m, model, limits, kMaxCountAllUniverse);
  return problem.solver.count_all();
}

/// Why `t` is not a valid tiling, or nullopt if it is one.
inline std::optional<std::string> tiling_defect(const TilingSolution& t) {
  if (t.root.s < 1 || t.root.j < 1 || Nat(t.root.j) > fib(t.root.s)) return "root is not a vertex";
  const std::size_t k = t.root.s;
  const ChainUniverse universe(k, t.height);
  if (universe.size() > Nat(kMaxChainUniverse) * 100) return "universe too large to verify";
  const auto universe_size = universe.size().convert_to<std::size_t>();

  std::vector<std::size_t> expected_shape;
  for (std::size_t s = 1; s <= t.height; ++s) expected_shape.push_back(detail::fib_size(s));
  std::vector<std::size_t> sorted_expected = expected_shape;
  std::sort(sorted_expected.begin(), sorted_expected.end());

  constexpr std::size_t kUnowned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(universe_size, kUnowned);
  for (std::size_t i = 0; i < t.copies.size(); ++i) {
    const CopySpec& copy = t.copies[i];
    const std::string label = "copy " + std::to_string(i);
    if (copy.root != t.root) return label + " has a different root";
    if (copy.height() != t.height) return label + " has the wrong height";
    std::vector<std::size_t> shape;
    for (std::size_t s = 1; s <= t.height; ++s) {
      const auto& level = copy.chosen[s - 1];
      if (!std::is_sorted(level.begin(), level.end()) ||
          std::adjacent_find(level.begin(), level.end()) != level.end())
        return label + " repeats or misorders positions";
      for (std::size_t pos : level)
        if (pos < 1 || pos > universe.level_sizes()[s - 1]) return label + " leaves the level population";
      shape.push_back(level.size());
    }
    if (t.model == CopyModel::literal) {
      if (shape != expected_shape) return label + " does not have the prototype level sizes";
    } else {
      std::sort(shape.begin(), shape.end());
      if (shape != sorted_expected) return label + " level sizes are not a permutation of the prototype's";
    }
    for (const auto& chain : chains_of_copy(copy)) {
      const std::size_t rank = universe.rank(chain);
      if (owner[rank] != kUnowned) {
        return "copies " + std::to_string(owner[rank]) + " and " + std::to_string(i) +
               " share a maximal chain";
      }
      owner[rank] = i;
    }
  }
  for (std::size_t rank = 0; rank < universe_size; ++rank)
    if (owner[rank] == kUnowned) return "chain #" + std::to_string(rank) + " is not covered";
  if (t.cover != owner) return "cover table disagrees with the copies";
  return std::nullopt;
}

inline bool verify_tiling(const TilingSolution& t) { return !tiling_defect(t).has_value(); }

}  // namespace cobweb
