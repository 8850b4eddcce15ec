// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// integer equality; the only tolerances are the wall-clock budgets below.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cobweb/fence.hpp"
#include "cobweb/format.hpp"
#include "cobweb/gvpaths.hpp"
#include "cobweb/oracles.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"
#include "cobweb/tiling.hpp"
#include "cobweb/verify.hpp"
#include "cobweb/weighted.hpp"
#include "reference_zeta.hpp"

using namespace cobweb;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetFibonomial = 1.0;
constexpr double kBudgetZeta = 1.0;
constexpr double kBudgetMobius = 5.0;
constexpr double kBudgetChains = 2.0;
constexpr double kBudgetTilingInstance = 10.0;
constexpr double kBudgetRatio = 1.0;
constexpr double kBudgetKonvalina = 30.0;
constexpr double kBudgetPaths = 60.0;
constexpr double kBudgetFence = 5.0;
constexpr double kBudgetVerifyAll = 120.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

struct Verdict {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void fail(std::string why) { failures.push_back(std::move(why)); }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, double budget, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(cat("exception: ", e.what()));
  }
  const double seconds = since(start);
  if (seconds > budget) v.fail(cat("took ", seconds, " s, budget ", budget, " s"));
  const bool ok = v.failures.empty();
  if (!ok) ++failed_criteria;
  std::printf("%s criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), seconds);
  for (const auto& f : v.failures) std::printf("    fail: %s\n", f.c_str());
  for (const auto& n : v.notes) std::printf("    info: %s\n", n.c_str());
  std::fflush(stdout);
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(COBWEB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

// All nondecreasing vectors over {1..max_weight} of length <= max_length.
std::vector<WeightVector> weight_vectors(std::size_t max_length, long long max_weight) {
  std::vector<WeightVector> out;
  std::vector<long long> current;
  std::function<void(long long)> extend = [&](long long lo) {
    out.push_back(WeightVector::from_integers(current));
    if (current.size() == max_length) return;
    for (long long w = lo; w <= max_weight; ++w) {
      current.push_back(w);
      extend(w);
      current.pop_back();
    }
  };
  extend(1);
  return out;
}

}  // namespace

int main() {
  criterion(1, "fibonomial product formula = recurrence A = recurrence B (n <= 30), symmetry (n <= 40)",
            kBudgetFibonomial, [](Verdict& v) {
              for (std::size_t n = 0; n <= 30; ++n)
                for (std::size_t k = 0; k <= n; ++k) {
                  const Nat direct = fibonomial(n, k);
                  if (fibonomial_rec(n, k, RecurrenceVariant::A) != direct) v.fail(cat("variant A n=", n, " k=", k));
                  if (fibonomial_rec(n, k, RecurrenceVariant::B) != direct) v.fail(cat("variant B n=", n, " k=", k));
                }
              for (std::size_t n = 0; n <= 40; ++n)
                for (std::size_t k = 0; k <= n; ++k)
                  if (fibonomial(n, k) != fibonomial(n, n - k)) v.fail(cat("symmetry n=", n, " k=", k));
              if (fibonomial(5, 2) != 15 || fibonomial(10, 5) != 136136) v.fail("reference values");
            });

  criterion(2, "zeta_explicit = zeta_from_order (N = 1..10); N = 6 block equals the published 15x15 block",
            kBudgetZeta, [](Verdict& v) {
              for (std::size_t n = 1; n <= 10; ++n) {
                const auto p = CobwebPoset::build(n);
                if (zeta_explicit(p) != zeta_from_order(p)) v.fail(cat("constructions differ at N=", n));
              }
              const auto z = zeta_explicit(CobwebPoset::build(6));
              for (std::size_t x = 1; x <= 15; ++x)
                for (std::size_t y = 1; y <= 15; ++y)
                  if (z(x, y) != reference_zeta::block[x - 1][y - 1])
                    v.fail(cat("published block (", x, ", ", y, ") = ", reference_zeta::block[x - 1][y - 1], ", computed ",
                               z(x, y), " (", to_string(CobwebPoset::build(6).coord_of(x)), " vs ",
                               to_string(CobwebPoset::build(6).coord_of(y)), ")"));
            });

  criterion(3, "zeta * mu = identity (N = 1..10)", kBudgetMobius, [](Verdict& v) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto p = CobwebPoset::build(n);
      if (zeta_from_order(p) * mobius(p) != IncMatrix::identity(p.vertex_count())) v.fail(cat("N=", n));
    }
    v.notes.push_back(cat("largest dimension ", CobwebPoset::build(10).vertex_count()));
  });

  criterion(4, "maximal chain enumeration on P_6 matches n_F! and falling F-factorials", kBudgetChains,
            [](Verdict& v) {
              const auto p = CobwebPoset::build(6);
              for (std::size_t n = 1; n <= 6; ++n)
                if (Nat(enumerate_max_chains(p, {1, 1}, n).size()) != f_factorial(n)) v.fail(cat("root n=", n));
              for (std::size_t k = 1; k <= 6; ++k)
                for (std::size_t j = 1; j <= p.level_size(k); ++j)
                  for (std::size_t n = k; n <= 6; ++n)
                    if (Nat(enumerate_max_chains(p, {j, k}, n).size()) != f_falling(n, n - k))
                      v.fail(cat("<", j, ",", k, "> to level ", n));
              if (enumerate_max_chains(p, {1, 1}, 5).size() != 30) v.fail("root to level 5 is not 30");
              if (enumerate_max_chains(p, {2, 3}, 6).size() != 120) v.fail("<2,3> to level 6 is not 120");
            });

  {
    const std::vector<std::pair<std::size_t, std::size_t>> instances{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
    criterion(5, "exact-cover tiling with fibonomial(k+m, m) copies for (k,m) in {(1,1),(1,2),(1,3),(2,2),(2,3),(3,2)}",
              kBudgetTilingInstance * instances.size(), [&](Verdict& v) {
                for (const auto& [k, m] : instances) {
                  const auto start = Clock::now();
                  const auto t = find_tiling(k, 1, m, CopyModel::literal);
                  const double seconds = since(start);
                  if (seconds > kBudgetTilingInstance) v.fail(cat("(", k, ",", m, ") took ", seconds, " s"));
                  const Nat expected = fibonomial(k + m, m);
                  if (!t) {
                    std::string why = cat("(", k, ",", m, "): no exact cover of ", ChainUniverse(k, m).size(),
                                          " chains by literal copies");
                    if (const auto s = literal_tiling_obstruction(k, m))
                      why += cat("; F_", *s, " = ", fib(*s), " does not divide F_", k + *s, " = ", fib(k + *s));
                    v.fail(why);
                    continue;
                  }
                  if (const auto defect = tiling_defect(*t)) v.fail(cat("(", k, ",", m, "): ", *defect));
                  if (Nat(t->copies.size()) != expected)
                    v.fail(cat("(", k, ",", m, "): ", t->copies.size(), " copies, expected ", expected));
                  if (k == 2 && m == 3 && (t->cover.size() != 30 || t->copies.size() != 15))
                    v.fail("(2,3) is not 30 chains in 15 copies");
                }
                for (const auto& [k, m] : instances) {
                  const auto t = find_tiling(k, 1, m, CopyModel::level_permuted);
                  const bool ok = t && verify_tiling(*t) && Nat(t->copies.size()) == fibonomial(k + m, m);
                  v.notes.push_back(cat("level-permuted copies (", k, ",", m, "): ",
                                        ok ? cat(t->copies.size(), " copies, verified") : std::string("no cover")));
                }
              });
  }

  criterion(6, "ratio identity and symmetry rewrite of the recurrence (0 < k <= n <= 40)", kBudgetRatio,
            [](Verdict& v) {
              for (std::size_t n = 1; n <= 40; ++n)
                for (std::size_t k = 1; k <= n; ++k) {
                  if (!ratio_identity(n, k)) v.fail(cat("ratio n=", n, " k=", k));
                  if (!recurrence_decomposition_check(n, k)) v.fail(cat("rewrite n=", n, " k=", k));
                }
            });

  criterion(7, "weighted coefficients: recurrences = brute force, presets reproduce classical numbers", kBudgetKonvalina,
            [](Verdict& v) {
              const auto vectors = weight_vectors(8, 3);
              for (const auto& w : vectors)
                for (std::size_t k = 0; k <= 8; ++k) {
                  if (c_coeff(w, k) != c_coeff_oracle(w, k)) v.fail(cat("C length=", w.size(), " k=", k));
                  if (w.empty() && k > 0) continue;
                  if (s_coeff(w, k) != s_coeff_oracle(w, k)) v.fail(cat("S length=", w.size(), " k=", k));
                }
              v.notes.push_back(cat(vectors.size(), " nondecreasing weight vectors checked"));
              for (std::size_t n = 1; n <= 7; ++n)
                for (std::size_t k = 0; k <= 7; ++k) {
                  if (c_coeff(preset::ones(n), k) != oracle::binomial_pascal(n, k)) v.fail(cat("binomial ", n, ",", k));
                  if (s_coeff(preset::ones(n), k) != oracle::binomial_pascal(n + k - 1, k))
                    v.fail(cat("multiset ", n, ",", k));
                  const Nat first = k <= n + 1 ? oracle::stirling_first(n + 1, n + 1 - k) : Nat(0);
                  if (c_coeff(preset::arithmetic(n), k) != first) v.fail(cat("Stirling 1st ", n, ",", k));
                  if (s_coeff(preset::arithmetic(n), k) != oracle::stirling_second(n + k, n))
                    v.fail(cat("Stirling 2nd ", n, ",", k));
                }
              for (int q : {2, 3})
                for (std::size_t n = 1; n <= 6; ++n)
                  for (std::size_t k = 0; k <= 6; ++k)
                    if (s_coeff(preset::geometric_q(n, q), k) != oracle::q_binomial_pascal(n + k - 1, k).evaluate(q))
                      v.fail(cat("Gaussian q=", q, " n=", n, " k=", k));
            });

  criterion(8, "lattice paths: sum of N(R) = fibonomial(n+1, k), every N(R) >= 0 (n <= 12)", kBudgetPaths,
            [](Verdict& v) {
              for (std::size_t n = 0; n <= 12; ++n)
                for (std::size_t k = 0; k <= n + 1; ++k) {
                  // negative N(R) raises negative_path_count, reported as a failure
                  if (fibonomial_via_paths(n, k) != fibonomial(n + 1, k)) v.fail(cat("n=", n, " k=", k));
                }
            });

  criterion(9, "fence ideals: transfer = brute force (m <= 15), = F_{m+2} (m <= 30); Beck identities (n <= 40)",
            kBudgetFence, [](Verdict& v) {
              for (std::size_t m = 0; m <= 15; ++m)
                if (count_ideals(m) != count_ideals_oracle(m)) v.fail(cat("brute force m=", m));
              for (std::size_t m = 0; m <= 30; ++m)
                if (count_ideals(m) != fib(m + 2)) v.fail(cat("fibonacci m=", m));
              for (std::size_t n = 2; n <= 40; ++n)
                for (std::size_t k = 2; k <= n; ++k)
                  if (!beck_identities(n, k)) v.fail(cat("Beck n=", n, " k=", k));
            });

  criterion(10, "CLI: verify --suite all exits 0 within budget; emitted JSON round-trips", kBudgetVerifyAll + 30.0,
            [](Verdict& v) {
              const auto start = Clock::now();
              const auto verify = run_cli("verify --suite all");
              const double seconds = since(start);
              if (verify.code != 0) v.fail(cat("verify --suite all exited ", verify.code, "\n", verify.out));
              if (seconds > kBudgetVerifyAll) v.fail(cat("verify --suite all took ", seconds, " s"));
              v.notes.push_back(cat("verify --suite all: ", seconds, " s"));

              for (const char* args :
                   {"fibonomial 30 15", "fibonomial --triangle 6", "zeta 5", "zeta 8 --check", "mobius 5",
                    "chains 2 5 --enumerate", "tiling 3 1 2", "tiling 2 1 3 --permuted", "tiling 2 1 3", "gv 8 4",
                    "konvalina c 3 --weights 1,2,2,3", "konvalina s 4 --preset geometric:3:2", "fence 25", "hasse 5",
                    "verify --suite fence"}) {
                const auto run = run_cli(std::string(args) + " --format json");
                try {
                  const auto record = Json::parse(run.out);
                  if (record.dump(2) + "\n" != run.out) v.fail(cat("'", args, "' does not re-serialize identically"));
                  for (const char* key : {"command", "inputs", "result", "version"})
                    if (!record.contains(key)) v.fail(cat("'", args, "' lacks ", key));
                  if (record.at("result").is_number_float()) v.fail(cat("'", args, "' emits a float"));
                } catch (const std::exception& e) {
                  v.fail(cat("'", args, "' emitted unparsable JSON: ", e.what()));
                }
              }
              auto tiling = Json::parse(run_cli("tiling 2 1 3 --permuted --format json").out).at("result");
              tiling.erase("verdict");
              if (tiling_to_json(tiling_from_json(tiling)) != tiling) v.fail("tiling record does not round-trip");
            });

  std::printf("%d of 10 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
