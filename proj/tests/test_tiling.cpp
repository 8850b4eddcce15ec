#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "cobweb/oracles.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/tiling.hpp"

using namespace cobweb;

TEST(EnumerateCopies, Counts) {
  EXPECT_EQ(enumerate_copies(1, 1, 2).size(), 2);
  // binomial(2,1) binomial(3,1) binomial(5,2)
  EXPECT_EQ(enumerate_copies(2, 1, 3).size(), 60);
  EXPECT_EQ(enumerate_copies(1, 1, 1).size(), 1);
  EXPECT_EQ(enumerate_copies(3, 2, 2).size(), enumerate_copies(3, 1, 2).size());
}

TEST(EnumerateCopies, Validation) {
  EXPECT_THROW(enumerate_copies(0, 1, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_copies(3, 3, 2), std::invalid_argument);
  // 3 * 5 * 28 * 286 = 120120 candidates, just over the guard
  EXPECT_THROW(enumerate_copies(3, 1, 4), guard_exceeded);
  EXPECT_EQ(enumerate_copies(3, 1, 4, CopyModel::literal, Limits::lifted).size(), 120120u);
}

TEST(EnumerateCopies, CopiesAreDistinctAndWellFormed) {
  const auto copies = enumerate_copies(2, 1, 3);
  std::set<std::vector<std::vector<std::size_t>>> seen;
  for (const auto& c : copies) {
    EXPECT_EQ(c.root, (VertexCoord{1, 2}));
    ASSERT_EQ(c.height(), 3);
    for (std::size_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(Nat(c.chosen[s - 1].size()), fib(s));
      for (auto pos : c.chosen[s - 1]) EXPECT_LE(Nat(pos), fib(2 + s));
    }
    seen.insert(c.chosen);
  }
  EXPECT_EQ(seen.size(), copies.size());
}

TEST(EnumerateCopies, CountIsProductOfBinomials) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t m = 0; m <= 4; ++m) {
      Nat expected = 1;
      for (std::size_t s = 1; s <= m; ++s)
        expected *= oracle::binomial_pascal(fib(k + s).convert_to<std::size_t>(), fib(s).convert_to<std::size_t>());
      EXPECT_EQ(copy_candidate_count(k, m), expected) << k << "," << m;
      if (expected <= kMaxCopyCandidates) EXPECT_EQ(Nat(enumerate_copies(k, 1, m).size()), expected);
    }
}

TEST(EnumerateCopies, LevelPermutedShapes) {
  // sizes {1,1,2} on levels of size 2,3,5: the 2 goes on any of the three
  EXPECT_EQ(copy_candidate_count(2, 3, CopyModel::level_permuted), 105);
  // on levels 1,2,3 the 2 cannot go on level 2 (size 1)
  EXPECT_EQ(copy_candidate_count(1, 3, CopyModel::level_permuted), 9);
}

TEST(ChainsOfCopy, SizesAreMFactorial) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto copies = enumerate_copies(2, 1, m, CopyModel::literal, Limits::lifted);
    for (std::size_t i = 0; i < copies.size(); i += 97) EXPECT_EQ(Nat(chains_of_copy(copies[i]).size()), f_factorial(m));
  }
  const CopySpec c{{1, 2}, {{2}, {1}, {1, 4}}};
  EXPECT_EQ(chains_of_copy(c), (std::vector<ChainTuple>{{2, 1, 1}, {2, 1, 4}}));
}

TEST(ChainUniverse, RankRoundTrip) {
  const ChainUniverse u(2, 3);
  EXPECT_EQ(u.size(), 30);
  for (std::size_t r = 0; r < 30; ++r) EXPECT_EQ(u.rank(u.unrank(r)), r);
  EXPECT_THROW(u.rank({3, 1, 1}), std::out_of_range);
}

TEST(ChainUniverse, MatchesPosetEnumeration) {
  // chains from <1,2> to level 5, read as position tuples
  const auto p = CobwebPoset::build(5);
  const ChainUniverse u(2, 3);
  const auto chains = enumerate_max_chains(p, {1, 2}, 5);
  ASSERT_EQ(Nat(chains.size()), u.size());
  for (std::size_t r = 0; r < chains.size(); ++r) {
    ChainTuple t;
    for (std::size_t i = 1; i < chains[r].size(); ++i) t.push_back(chains[r][i].j);
    EXPECT_EQ(u.rank(t), r);
  }
}

TEST(RatioIdentity, Examples) {
  EXPECT_TRUE(ratio_identity(5, 2));
  EXPECT_TRUE(ratio_identity(7, 7));
  EXPECT_TRUE(ratio_identity(10, 5));
  for (std::size_t n = 1; n <= 40; ++n)
    for (std::size_t k = 1; k <= n; ++k) ASSERT_TRUE(ratio_identity(n, k));
  EXPECT_THROW(ratio_identity(3, 0), std::invalid_argument);
}

TEST(RecurrenceDecomposition, Examples) {
  EXPECT_EQ(fibonomial(6, 2), 2 * 15 + 2 * 5);
  EXPECT_EQ(fibonomial(6, 2), 1 * 15 + 5 * 5);
  EXPECT_TRUE(recurrence_decomposition_check(5, 2));
  EXPECT_TRUE(recurrence_decomposition_check(1, 1));
  for (std::size_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(fibonomial(n + 1, n), fib(n + 1));
    for (std::size_t k = 1; k <= n; ++k) ASSERT_TRUE(recurrence_decomposition_check(n, k));
  }
  EXPECT_THROW(recurrence_decomposition_check(3, 4), std::invalid_argument);
}

TEST(FindTiling, TrivialInstances) {
  for (auto [k, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}}) {
    const auto t = find_tiling(k, 1, m);
    ASSERT_TRUE(t) << k << "," << m;
    EXPECT_TRUE(verify_tiling(*t));
    EXPECT_EQ(Nat(t->copies.size()), fibonomial(k + m, m));
  }
  EXPECT_EQ(find_tiling(1, 1, 2)->copies.size(), 2);
  EXPECT_EQ(find_tiling(1, 1, 1)->copies.size(), 1);
}

TEST(FindTiling, LiteralCopiesCannotTileWhenParityFails) {
  // F_3 = 2 divides neither F_4 = 3 nor F_5 = 5
  EXPECT_EQ(literal_tiling_obstruction(1, 3), 3u);
  EXPECT_EQ(literal_tiling_obstruction(2, 3), 3u);
  EXPECT_FALSE(find_tiling(1, 1, 3));
  EXPECT_FALSE(find_tiling(2, 1, 3));
  EXPECT_FALSE(literal_tiling_obstruction(3, 3));
}

TEST(FindTiling, SearchAgreesWithObstruction) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t m = 1; m <= 3; ++m) {
      if (copy_candidate_count(k, m) > kMaxCopyCandidates) continue;
      EXPECT_EQ(find_tiling(k, 1, m).has_value(), !literal_tiling_obstruction(k, m).has_value()) << k << "," << m;
    }
}

TEST(FindTiling, LevelPermutedCopiesTile) {
  for (auto [k, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 3}, {1, 4}, {4, 3}}) {
    const auto t = find_tiling(k, 1, m, CopyModel::level_permuted);
    ASSERT_TRUE(t) << k << "," << m;
    EXPECT_TRUE(verify_tiling(*t));
    EXPECT_EQ(Nat(t->copies.size()), fibonomial(k + m, m));
  }
  const auto t = find_tiling(2, 1, 3, CopyModel::level_permuted);
  EXPECT_EQ(t->copies.size(), 15);
  EXPECT_EQ(t->cover.size(), 30);
}

TEST(FindTiling, IndependentOfRoot) {
  const auto a = find_tiling(3, 1, 2);
  const auto b = find_tiling(3, 2, 2);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->copies.size(), b->copies.size());
  EXPECT_EQ(b->copies.front().root, (VertexCoord{2, 3}));
  EXPECT_TRUE(verify_tiling(*b));
}

TEST(FindTiling, Guards) {
  EXPECT_THROW(find_tiling(5, 1, 4), guard_exceeded);
  EXPECT_EQ(ChainUniverse(3, 3).size(), 120);
  EXPECT_THROW(count_tilings(3, 1, 3), guard_exceeded);
}

TEST(CountTilings, SmallInstances) {
  // single-chain copies: exactly one way
  EXPECT_EQ(count_tilings(2, 1, 2), 1);
  EXPECT_EQ(count_tilings(1, 1, 3), 0);
  // (1,3) with permuted blocks: either every copy takes the level-3 pair, or one
  // level-4 vertex v does and each level-3 vertex pairs the other two: 1 + 3
  EXPECT_EQ(count_tilings(1, 1, 3, CopyModel::level_permuted), 4);
}

TEST(VerifyTiling, DetectsDefects) {
  const auto good = find_tiling(2, 1, 3, CopyModel::level_permuted);
  ASSERT_TRUE(good);
  EXPECT_TRUE(verify_tiling(*good));

  auto overlapping = *good;
  overlapping.copies[1] = overlapping.copies[0];  // one chain family now claimed twice
  EXPECT_FALSE(verify_tiling(overlapping));

  auto missing = *good;
  missing.copies.pop_back();  // some chains left uncovered
  EXPECT_FALSE(verify_tiling(missing));

  auto wrong_root = *good;
  wrong_root.copies[0].root = {2, 2};
  EXPECT_FALSE(verify_tiling(wrong_root));

  auto wrong_model = *good;
  wrong_model.model = CopyModel::literal;
  EXPECT_FALSE(verify_tiling(wrong_model));

  auto stale_cover = *good;
  std::swap(stale_cover.cover[0], stale_cover.cover.back());
  if (stale_cover.cover != good->cover) EXPECT_FALSE(verify_tiling(stale_cover));
}
