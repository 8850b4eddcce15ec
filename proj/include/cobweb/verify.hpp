#pragma once

// Property suites behind `cobweb verify`. Each property runs at a fixed range
// and reports the first counterexample it meets.

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cobweb/fence.hpp"
#include "cobweb/gvpaths.hpp"
#include "cobweb/oracles.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"
#include "cobweb/tiling.hpp"
#include "cobweb/weighted.hpp"

namespace cobweb {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample on failure, notes otherwise
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Flip zeta(row, col) of the order-built matrix before the poset suite
  /// compares constructions. For exercising the failure path.
  std::optional<std::pair<std::size_t, std::size_t>> zeta_fault;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "poset", "tiling", "paths", "fence"};
  return names;
}

namespace detail {

// A check passes with an optional note, or fails with a counterexample.
// Returning a plain string means: empty passes, anything else is the failure.
struct Outcome {
  bool ok = true;
  std::string detail;

  Outcome(std::string failure) : ok(failure.empty()), detail(std::move(failure)) {}  // NOLINT
  static Outcome note(std::string text) {
    Outcome o{std::string()};
    o.detail = std::move(text);
    return o;
  }
};

using Check = std::function<Outcome()>;

class SuiteRunner {
 public:
  explicit SuiteRunner(std::string suite) : suite_(std::move(suite)) {}

  void run(std::string name, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    PropertyResult result{suite_, std::move(name), false, "", 0.0};
    try {
      Outcome outcome = check();
      result.passed = outcome.ok;
      result.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(result));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<PropertyResult> results_;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

inline std::vector<WeightVector> small_weight_vectors(std::size_t max_length, std::size_t max_weight) {
  std::vector<WeightVector> out;
  std::vector<long long> current;
  std::function<void(long long)> extend = [&](long long min_weight) {
    out.push_back(WeightVector::from_integers(current));
    if (current.size() == max_length) return;
    for (long long w = min_weight; w <= static_cast<long long>(max_weight); ++w) {
      current.push_back(w);
      extend(w);
      current.pop_back();
    }
  };
  extend(1);
  return out;
}

inline std::vector<PropertyResult> arith_suite() {
  SuiteRunner run("arith");
  run.run("fibonomial symmetry, n <= 40", [] {
    for (std::size_t n = 0; n <= 40; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        if (fibonomial(n, k) != fibonomial(n, n - k)) return describe("n=", n, " k=", k);
    return std::string();
  });
  run.run("recurrences A and B match the product formula, n <= 30", [] {
    for (std::size_t n = 0; n <= 30; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const Nat direct = fibonomial(n, k);
        if (fibonomial_rec(n, k, RecurrenceVariant::A) != direct) return describe("variant A n=", n, " k=", k);
        if (fibonomial_rec(n, k, RecurrenceVariant::B) != direct) return describe("variant B n=", n, " k=", k);
      }
    return std::string();
  });
  run.run("fibonomial division is exact, n <= 200", [] {
    for (std::size_t n = 0; n <= 200; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        Nat q, r;
        boost::multiprecision::divide_qr(f_falling(n, k), f_factorial(k), q, r);
        if (r != 0) return describe("n=", n, " k=", k);
      }
    return std::string();
  });
  run.run("f_falling(n,k) * f_factorial(n-k) = f_factorial(n), n <= 40", [] {
    for (std::size_t n = 0; n <= 40; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        if (f_falling(n, k) * f_factorial(n - k) != f_factorial(n)) return describe("n=", n, " k=", k);
    return std::string();
  });
  run.run("q_binomial nonnegative with coefficient sum binomial(n,k), n <= 14", [] {
    for (std::size_t n = 0; n <= 14; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const IntPolynomial p = q_binomial(n, k);
        Int sum = 0;
        for (const auto& c : p.coefficients()) {
          if (c < 0) return describe("negative coefficient n=", n, " k=", k);
          sum += c;
        }
        if (sum != oracle::binomial_pascal(n, k)) return describe("sum n=", n, " k=", k);
      }
    return std::string();
  });
  run.run("Konvalina recurrences match brute force, length <= 8 over {1,2,3}, k <= 8", [] {
    for (const auto& w : small_weight_vectors(8, 3))
      for (std::size_t k = 0; k <= 8; ++k) {
        if (c_coeff(w, k) != c_coeff_oracle(w, k)) return describe("C length=", w.size(), " k=", k);
        if (!(w.empty() && k > 0) && s_coeff(w, k) != s_coeff_oracle(w, k))
          return describe("S length=", w.size(), " k=", k);
      }
    return std::string();
  });
  run.run("ones preset gives binomial(n,k) and binomial(n+k-1,k), n,k <= 10", [] {
    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t k = 0; k <= 10; ++k) {
        const auto w = preset::ones(n);
        if (c_coeff(w, k) != oracle::binomial_pascal(n, k)) return describe("C n=", n, " k=", k);
        if (s_coeff(w, k) != oracle::binomial_pascal(n + k - 1, k)) return describe("S n=", n, " k=", k);
      }
    return std::string();
  });
  run.run("arithmetic preset gives Stirling numbers of both kinds, n,k <= 7", [] {
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t k = 0; k <= 7; ++k) {
        const auto w = preset::arithmetic(n);
        if (k <= n + 1 && c_coeff(w, k) != oracle::stirling_first(n + 1, n + 1 - k))
          return describe("first kind n=", n, " k=", k);
        if (k > n + 1 && c_coeff(w, k) != 0) return describe("first kind n=", n, " k=", k);
        if (s_coeff(w, k) != oracle::stirling_second(n + k, n)) return describe("second kind n=", n, " k=", k);
      }
    return std::string();
  });
  run.run("geometric preset gives Gaussian coefficients at q in {2,3}, n,k <= 6", [] {
    for (int q : {2, 3})
      for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k <= 6; ++k)
          if (s_coeff(preset::geometric_q(n, q), k) != q_binomial(n + k - 1, k).evaluate(q))
            return describe("q=", q, " n=", n, " k=", k);
    return std::string();
  });
  return run.take();
}

inline std::vector<PropertyResult> poset_suite(const VerifyOptions& options) {
  SuiteRunner run("poset");
  run.run("zeta_explicit = zeta_from_order, N <= 10", [&] {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto p = CobwebPoset::build(n);
      IncMatrix from_order = zeta_from_order(p);
      if (options.zeta_fault) {
        const auto [row, col] = *options.zeta_fault;
        if (row <= col && col <= from_order.dim()) from_order.set(row, col, 1 - from_order(row, col));
      }
      const IncMatrix explicit_zeta = zeta_explicit(p);
      for (std::size_t x = 1; x <= p.vertex_count(); ++x)
        for (std::size_t y = x; y <= p.vertex_count(); ++y)
          if (from_order(x, y) != explicit_zeta(x, y)) return describe("N=", n, " (row, col) = (", x, ", ", y, ")");
    }
    return std::string();
  });
  run.run("zeta * mu = identity, N <= 10", [] {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto p = CobwebPoset::build(n);
      const auto zeta = zeta_from_order(p);
      const auto mu = mobius(p);
      if (zeta * mu != IncMatrix::identity(p.vertex_count())) return describe("N=", n);
    }
    return std::string();
  });
  run.run("Moebius sums over intervals vanish, N <= 8", [] {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto p = CobwebPoset::build(n);
      const auto mu = mobius(p);
      for (std::size_t x = 1; x <= p.vertex_count(); ++x)
        for (std::size_t y = x; y <= p.vertex_count(); ++y) {
          if (!p.leq(x, y)) continue;
          Int sum = 0;
          for (std::size_t z = x; z <= y; ++z)
            if (p.leq(x, z) && p.leq(z, y)) sum += mu(x, z);
          if (sum != (x == y ? 1 : 0)) return describe("N=", n, " x=", x, " y=", y);
        }
    }
    return std::string();
  });
  run.run("root chain enumeration gives n_F!, n <= 6", [] {
    const auto p = CobwebPoset::build(6);
    for (std::size_t n = 1; n <= 6; ++n)
      if (Nat(enumerate_max_chains(p, {1, 1}, n).size()) != f_factorial(n)) return describe("n=", n);
    return std::string();
  });
  run.run("vertex chain enumeration gives falling factorials, k <= n <= 6", [] {
    const auto p = CobwebPoset::build(6);
    for (std::size_t k = 1; k <= 6; ++k)
      for (std::size_t j = 1; j <= p.level_size(k); ++j)
        for (std::size_t n = k; n <= 6; ++n) {
          const Nat count = enumerate_max_chains(p, {j, k}, n).size();
          if (count != f_falling(n, n - k) || count != count_max_chains_from_vertex(p, {j, k}, n) ||
              count != count_max_chains_dp(p, {j, k}, n))
            return describe("v=<", j, ",", k, "> n=", n);
        }
    return std::string();
  });
  run.run("count_all_chains matches subset enumeration on P_5", [] {
    const auto p = CobwebPoset::build(5);
    const auto matrix = chain_count_matrix(p);
    for (std::size_t x = 1; x <= p.vertex_count(); ++x)
      for (std::size_t y = 1; y <= p.vertex_count(); ++y) {
        const Nat expected = oracle::chain_count_by_subsets(p, x, y);
        if (count_all_chains(p, x, y) != expected) return describe("x=", x, " y=", y);
        if (x <= y && matrix(x, y) != expected) return describe("matrix x=", x, " y=", y);
      }
    return std::string();
  });
  return run.take();
}

inline std::vector<PropertyResult> tiling_suite() {
  SuiteRunner run("tiling");
  run.run("candidate count = prod binomial(F_{k+s}, F_s), independent of r", [] {
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t m = 1; m <= 4; ++m) {
        Nat expected = 1;
        for (std::size_t s = 1; s <= m; ++s)
          expected *= oracle::binomial_pascal(fib(k + s).convert_to<std::size_t>(), fib(s).convert_to<std::size_t>());
        if (expected > kMaxCopyCandidates) continue;
        for (std::size_t r = 1; Nat(r) <= fib(k); ++r)
          if (Nat(enumerate_copies(k, r, m).size()) != expected) return describe("k=", k, " r=", r, " m=", m);
      }
    return std::string();
  });
  run.run("universe arithmetic f_falling(k+m,m) = (k+m m)_F m_F!, k+m <= 40", [] {
    for (std::size_t n = 1; n <= 40; ++n)
      for (std::size_t m = 0; m <= n; ++m)
        if (f_falling(n, m) != fibonomial(n, m) * f_factorial(m)) return describe("n=", n, " m=", m);
    return std::string();
  });
  run.run("found tilings are valid with (k+m m)_F copies", []() -> Outcome {
    std::string absent;
    for (auto [k, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      for (CopyModel model : {CopyModel::literal, CopyModel::level_permuted}) {
        const auto t = find_tiling(k, 1, m, model);
        if (!t) {
          if (model == CopyModel::level_permuted) return describe("no level-permuted tiling k=", k, " m=", m);
          absent += describe(absent.empty() ? "" : ", ", "(", k, ",", m, ")");
          continue;
        }
        if (!verify_tiling(*t) || Nat(t->copies.size()) != fibonomial(k + m, m))
          return describe(to_string(model), " k=", k, " m=", m);
      }
    }
    if (absent.empty()) return std::string();
    return Outcome::note("no literal tiling exists for " + absent);
  });
  run.run("literal search agrees with the divisibility obstruction", [] {
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t m = 1; m <= 3; ++m) {
        if (copy_candidate_count(k, m) > kMaxCopyCandidates || ChainUniverse(k, m).size() > kMaxChainUniverse) continue;
        const bool found = find_tiling(k, 1, m).has_value();
        const bool obstructed = literal_tiling_obstruction(k, m).has_value();
        if (found == obstructed) return describe("k=", k, " m=", m);
      }
    return std::string();
  });
  run.run("ratio identity, 0 < k <= n <= 40", [] {
    for (std::size_t n = 1; n <= 40; ++n)
      for (std::size_t k = 1; k <= n; ++k)
        if (!ratio_identity(n, k)) return describe("n=", n, " k=", k);
    return std::string();
  });
  run.run("recurrence decomposition, 0 < k <= n <= 30", [] {
    for (std::size_t n = 1; n <= 30; ++n)
      for (std::size_t k = 1; k <= n; ++k)
        if (!recurrence_decomposition_check(n, k)) return describe("n=", n, " k=", k);
    return std::string();
  });
  return run.take();
}

inline std::vector<PropertyResult> paths_suite() {
  SuiteRunner run("paths");
  run.run("sum of N(R) = (n+1 k)_F with N(R) >= 0, n <= 12", [] {
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t k = 0; k <= n + 1; ++k)
        if (fibonomial_via_paths(n, k) != fibonomial(n + 1, k)) return describe("n=", n, " k=", k);
    return std::string();
  });
  run.run("Bareiss determinant = cofactor expansion on path matrices, k <= 4, n <= 12", [] {
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t k = 0; k <= 4 && k <= n + 1; ++k) {
        std::vector<std::size_t> r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = i;
        while (true) {
          const IntMatrix m = path_matrix(IndexSet(r, n));
          if (determinant(m) != oracle::determinant_cofactor(m)) return describe("n=", n, " k=", k);
          std::size_t i = k;
          while (i > 0 && r[i - 1] == n + 1 - k + (i - 1)) --i;
          if (i == 0) break;
          ++r[i - 1];
          for (std::size_t j = i; j < k; ++j) r[j] = r[j - 1] + 1;
        }
      }
    return std::string();
  });
  return run.take();
}

inline std::vector<PropertyResult> fence_suite() {
  SuiteRunner run("fence");
  run.run("transfer recurrence = brute force, m <= 15", [] {
    for (std::size_t m = 0; m <= 15; ++m)
      if (count_ideals(m) != count_ideals_oracle(m)) return describe("m=", m);
    return std::string();
  });
  run.run("ideals = F_{m+2}, m <= 30", [] {
    for (std::size_t m = 0; m <= 30; ++m)
      if (count_ideals(m) != fib(m + 2)) return describe("m=", m);
    return std::string();
  });
  run.run("Beck identities, 2 <= k <= n <= 40", [] {
    for (std::size_t n = 2; n <= 40; ++n)
      for (std::size_t k = 2; k <= n; ++k)
        if (!beck_identities(n, k)) return describe("n=", n, " k=", k);
    return std::string();
  });
  run.run("filters and ideals are equinumerous, m <= 12", [] {
    for (std::size_t m = 0; m <= 12; ++m)
      if (count_filters_oracle(m) != count_ideals_oracle(m)) return describe("m=", m);
    return std::string();
  });
  return run.take();
}

}  // namespace detail

/// Runs one suite ("arith", "poset", "tiling", "paths", "fence") or "all".
inline std::vector<PropertyResult> run_suite(std::string_view suite, const VerifyOptions& options = {}) {
  if (suite == "all") {
    std::vector<PropertyResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, options);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  if (suite == "arith") return detail::arith_suite();
  if (suite == "poset") return detail::poset_suite(options);
  if (suite == "tiling") return detail::tiling_suite();
  if (suite == "paths") return detail::paths_suite();
  if (suite == "fence") return detail::fence_suite();
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace cobweb
