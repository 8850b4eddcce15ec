#include <gtest/gtest.h>

#include <future>
#include <thread>
#include <vector>

#include "cobweb/oracles.hpp"
#include "cobweb/seqcore.hpp"

using namespace cobweb;

TEST(Fib, BaseAndSmallValues) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(2), 1);
  // level populations 1,1,2,3,5
  EXPECT_EQ(fib(5), 5);
  EXPECT_EQ(fib(10), 55);
}

TEST(Fib, NegativeIndices) {
  EXPECT_EQ(fib_signed(-1), 1);
  EXPECT_EQ(fib_signed(-2), -1);
  EXPECT_EQ(fib_signed(-3), 2);
  EXPECT_EQ(fib_signed(-6), -8);
}

TEST(Fib, LargeIndexIsExact) {
  // F_100 exceeds 64 bits
  EXPECT_EQ(fib(100).str(), "354224848179261915075");
}

TEST(FFactorial, Values) {
  EXPECT_EQ(f_factorial(0), 1);
  EXPECT_EQ(f_factorial(5), 30);
  EXPECT_EQ(f_factorial(10), 122522400);
}

TEST(FFalling, Values) {
  EXPECT_EQ(f_falling(7, 0), 1);
  EXPECT_EQ(f_falling(6, 3), 120);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(f_falling(n, n), f_factorial(n)) << n;
}

TEST(FFalling, RejectsKAboveN) { EXPECT_THROW(f_falling(3, 4), std::invalid_argument); }

TEST(Fibonomial, Values) {
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(fibonomial(n, 0), 1);
  EXPECT_EQ(fibonomial(5, 2), 15);
  EXPECT_EQ(fibonomial(10, 5), 136136);
  EXPECT_EQ(fibonomial(0, 3), 0);
  EXPECT_EQ(fibonomial(4, 9), 0);
  EXPECT_EQ(fibonomial(30, 15).str(), "85795732985350617077294880882422546319842916360");
}

TEST(Fibonomial, TriangleRows) {
  const std::vector<std::vector<int>> rows{{1}, {1, 1}, {1, 1, 1}, {1, 2, 2, 1}, {1, 3, 6, 3, 1}};
  for (std::size_t n = 0; n < rows.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(fibonomial(n, k), rows[n][k]) << n << "," << k;
}

TEST(FibonomialRec, WorkedExamples) {
  // (6 2) = F_1 (5 2) + F_5 (5 1) = 15 + 25
  EXPECT_EQ(fibonomial_rec(6, 2, RecurrenceVariant::A), 40);
  // (6 2) = F_3 (5 2) + F_3 (5 1) = 30 + 10
  EXPECT_EQ(fibonomial_rec(6, 2, RecurrenceVariant::B), 40);
  EXPECT_EQ(fibonomial_rec(0, 3, RecurrenceVariant::A), 0);
  EXPECT_EQ(fibonomial_rec(0, 0, RecurrenceVariant::B), 1);
}

TEST(FibonomialProperties, Symmetry) {
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(fibonomial(n, k), fibonomial(n, n - k)) << n << "," << k;
}

TEST(FibonomialProperties, RecurrencesAgreeWithProductFormula) {
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= n + 2; ++k) {
      const Nat direct = fibonomial(n, k);
      ASSERT_EQ(fibonomial_rec(n, k, RecurrenceVariant::A), direct) << n << "," << k;
      ASSERT_EQ(fibonomial_rec(n, k, RecurrenceVariant::B), direct) << n << "," << k;
    }
}

TEST(FibonomialProperties, DivisionIsExactUpTo200) {
  for (std::size_t n = 0; n <= 200; n += 1)
    for (std::size_t k = 0; k <= n; ++k) ASSERT_NO_THROW(fibonomial(n, k)) << n << "," << k;
}

TEST(FibonomialProperties, FallingTimesFactorial) {
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(f_falling(n, k) * f_factorial(n - k), f_factorial(n));
}

TEST(ExactDiv, RejectsRemainder) {
  EXPECT_EQ(exact_div(Nat(30), Nat(6)), 5);
  EXPECT_THROW(exact_div(Nat(7), Nat(2)), std::logic_error);
  EXPECT_THROW(exact_div(Nat(7), Nat(0)), std::logic_error);
}

TEST(FibCache, ConcurrentReadersSeeConsistentValues) {
  std::vector<std::future<std::vector<Nat>>> workers;
  for (int t = 0; t < 8; ++t) {
    workers.push_back(std::async(std::launch::async, [t] {
      std::vector<Nat> values;
      for (std::size_t n = 0; n < 400; ++n) values.push_back(f_factorial((n * 7 + t * 13) % 400) + fib(n));
      return values;
    }));
  }
  std::vector<std::vector<Nat>> results;
  for (auto& w : workers) results.push_back(w.get());
  for (int t = 0; t < 8; ++t) {
    for (std::size_t n = 0; n < 400; ++n) {
      Nat factorial = 1;
      for (std::size_t i = 1; i <= (n * 7 + t * 13) % 400; ++i) factorial *= fib(i);
      ASSERT_EQ(results[t][n], factorial + fib(n));
    }
  }
}

TEST(IntPolynomial, CanonicalForm) {
  const IntPolynomial zero(std::vector<Int>{0, 0, 0});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  const IntPolynomial p(std::vector<Int>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.to_string(), "1 + 2q");
  EXPECT_EQ(IntPolynomial(std::vector<Int>{0, -1, 0, 3}).to_string(), "-q + 3q^3");
}

TEST(IntPolynomial, DivmodRoundTrip) {
  const IntPolynomial a(std::vector<Int>{1, -2, 0, 5, 1});
  const IntPolynomial b(std::vector<Int>{3, 0, 1});
  const IntPolynomial c(std::vector<Int>{-1, 4});
  auto [q, r] = divmod(a * b + c, b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, c);
}

TEST(QBinomial, Values) {
  EXPECT_EQ(q_binomial(5, 0), IntPolynomial::constant(1));
  EXPECT_EQ(q_binomial(4, 2), IntPolynomial(std::vector<Int>{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(3, 2).evaluate(1), 3);
  EXPECT_TRUE(q_binomial(2, 3).is_zero());
}

TEST(QBinomial, MatchesQPascalAndBinomialSums) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto p = q_binomial(n, k);
      ASSERT_EQ(p, oracle::q_binomial_pascal(n, k)) << n << "," << k;
      Int sum = 0;
      for (const auto& c : p.coefficients()) {
        ASSERT_GE(c, 0);
        sum += c;
      }
      ASSERT_EQ(sum, oracle::binomial_pascal(n, k));
    }
}
