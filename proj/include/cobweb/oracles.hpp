#pragma once

// Slow, independent reference computations. Nothing here calls into the
// routines it is used to check; tests and the `verify` suites compare the two.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cobweb/gvpaths.hpp"
#include "cobweb/nat.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"

namespace cobweb::oracle {

// Pascal's triangle rows 0..n.
inline std::vector<std::vector<Nat>> pascal_triangle(std::size_t n) {
  std::vector<std::vector<Nat>> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i].assign(i + 1, Nat(1));
    for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

inline Nat binomial_pascal(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return pascal_triangle(n)[n][k];
}

/// Unsigned Stirling numbers of the first kind, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
inline Nat stirling_first(std::size_t n, std::size_t k) {
  std::vector<std::vector<Nat>> c(n + 1, std::vector<Nat>(n + 1, Nat(0)));
  c[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (i - 1) * c[i - 1][j];
  return k > n ? Nat(0) : c[n][k];
}

/// Stirling numbers of the second kind, S(n,k) = S(n-1,k-1) + k S(n-1,k).
inline Nat stirling_second(std::size_t n, std::size_t k) {
  std::vector<std::vector<Nat>> s(n + 1, std::vector<Nat>(n + 1, Nat(0)));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
  return k > n ? Nat(0) : s[n][k];
}

/// Gaussian polynomial by the q-Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k].
inline IntPolynomial q_binomial_pascal(std::size_t n, std::size_t k) {
  if (k > n) return {};
  std::vector<std::vector<IntPolynomial>> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i].resize(i + 1);
    t[i][0] = t[i][i] = IntPolynomial::constant(1);
    for (std::size_t j = 1; j < i; ++j)
      t[i][j] = t[i - 1][j - 1] + IntPolynomial::monomial(1, j) * t[i - 1][j];
  }
  return t[n][k];
}

/// Laplace expansion along the first row.
inline Int determinant_cofactor(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][col] * determinant_cofactor(minor);
    total += col % 2 == 0 ? term : Int(-term);
  }
  return total;
}

/// Chains from x to y found by testing every subset of the open interval for
/// being totally ordered. Interval must have at most 20 interior elements.
inline Nat chain_count_by_subsets(const CobwebPoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) return 0;
  if (x == y) return 1;
  std::vector<std::size_t> interior;
  for (std::size_t z = 1; z <= p.vertex_count(); ++z)
    if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) interior.push_back(z);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior.size()); ++mask) {
    bool chain = true;
    for (std::size_t a = 0; a < interior.size() && chain; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = a + 1; b < interior.size() && chain; ++b) {
        if (!(mask >> b & 1)) continue;
        chain = p.leq(interior[a], interior[b]) || p.leq(interior[b], interior[a]);
      }
    }
    if (chain) ++count;
  }
  return count;
}

}  // namespace cobweb::oracle
