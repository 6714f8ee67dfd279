#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mzv/reflect.hpp"

using namespace mzv;

namespace {

BlockDecomposition random_decomposition(std::mt19937& rng, int max_blocks, int max_len) {
  std::uniform_int_distribution<int> nb(1, max_blocks), len(1, max_len), e(0, 1);
  BlockDecomposition b{e(rng), {}};
  const int n = nb(rng);
  for (int i = 0; i < n; ++i) b.lengths.push_back(len(rng));
  if (b.lengths.size() == 1 && b.lengths[0] < 2) b.lengths[0] = 2;
  return b;
}

}  // namespace

TEST(Refl, BlockExamples) {
  BlockDecomposition b{0, {5, 2, 1, 7}};
  EXPECT_EQ(refl_block(b, 1, 3).lengths, (std::vector<int>{1, 2, 5, 7}));
  EXPECT_EQ(refl_block(b, 2, 2), b);
  EXPECT_EQ(refl_block(b, 1, 4).lengths, dual(b).value.lengths);
  EXPECT_THROW(refl_block(b, 0, 2), std::out_of_range);
  EXPECT_THROW(refl_block(b, 3, 5), std::out_of_range);
}

TEST(Refl, BlockIsInvolutionPreservingWeight) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    BlockDecomposition b = random_decomposition(rng, 6, 6);
    const int n = static_cast<int>(b.block_count());
    std::uniform_int_distribution<int> pick(1, n);
    int j = pick(rng), k = pick(rng);
    if (j > k) std::swap(j, k);
    BlockDecomposition r = refl_block(b, j, k);
    ASSERT_EQ(refl_block(r, j, k), b);
    ASSERT_EQ(weight(r), weight(b));
    ASSERT_EQ(r.block_count(), b.block_count());
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(reflective_closure({BlockDecomposition{0, {1, 2, 3}}}).size(), 6u);
  EXPECT_EQ(reflective_closure({BlockDecomposition{0, {2, 2, 2}}}).size(), 1u);
  auto c = reflective_closure({BlockDecomposition{0, {5, 2, 1, 7}}});
  EXPECT_EQ(c.size(), 24u);
  // Brute force: closed under every refl_{j,k}.
  for (const auto& b : c)
    for (int j = 1; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) ASSERT_TRUE(c.count(refl_block(b, j, k)));
  EXPECT_THROW(reflective_closure({BlockDecomposition{0, {1, 2}}, BlockDecomposition{0, {1, 3}}}),
               std::invalid_argument);
}

TEST(Closure, IsAllPermutations) {
  std::vector<int> l = {1, 1, 2, 4, 4};
  std::set<BlockDecomposition> expect;
  std::sort(l.begin(), l.end());
  do expect.insert(BlockDecomposition{1, l});
  while (std::next_permutation(l.begin(), l.end()));
  EXPECT_EQ(reflective_closure({BlockDecomposition{1, {4, 1, 2, 1, 4}}}), expect);
}

TEST(Subsequence, ParseAndPrint) {
  Subsequence p = Subsequence::parse("((1; 1,3,4,1,5); 2,5; 1,3)");
  EXPECT_EQ(p.s, 2);
  EXPECT_EQ(p.t, 5);
  EXPECT_EQ(p.alpha, 1);
  EXPECT_EQ(p.beta, 3);
  EXPECT_EQ(letter_length(p), 9);
  EXPECT_EQ(to_string(p), "((1; 1,3,4,1,5); 2,5; 1,3)");
  EXPECT_THROW(Subsequence::parse("((1; 1,3,4,1,5); 2,5; 3,3)"), ParseError);
  EXPECT_THROW(Subsequence::parse("((1; 1,3); 2,1; 0,0)"), ParseError);
}

TEST(Subsequence, EnumerationCounts) {
  EXPECT_EQ(enumerate_subsequences(BlockDecomposition{0, {12}}, 5).size(), 8u);
  for (const auto& p : enumerate_subsequences(BlockDecomposition{0, {12}}, 5)) EXPECT_EQ(p.s, 1);
  EXPECT_TRUE(enumerate_subsequences(BlockDecomposition{0, {2, 1}}, 5).empty());
  EXPECT_THROW(enumerate_subsequences(BlockDecomposition{0, {12}}, 4), std::invalid_argument);

  std::mt19937 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    BlockDecomposition b = random_decomposition(rng, 6, 5);
    const std::string w = word_of(b).str();
    for (int l = 5; l <= static_cast<int>(w.size()); l += 2) {
      auto subs = enumerate_subsequences(b, l);
      ASSERT_EQ(subs.size(), w.size() - l + 1);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const Subsequence& p = subs[i];
        ASSERT_TRUE(is_valid(p));
        ASSERT_EQ(letter_length(p), l);
        ASSERT_EQ(cut_offset(p), static_cast<int>(i));
        ASSERT_EQ(cut_word(p).str(), w.substr(i, l));
        // Validity clauses, checked directly.
        ASSERT_LE(1, p.s);
        ASSERT_LE(p.s, p.t);
        ASSERT_LT(p.alpha, b.lengths[p.s - 1]);
        ASSERT_LT(p.beta, b.lengths[p.t - 1]);
        if (p.s == p.t) ASSERT_LE(p.alpha + p.beta + 2, b.lengths[p.s - 1]);
      }
    }
  }
}

TEST(Subsequence, QuotientKeepsSharedBoundaryLetters) {
  Subsequence p{BlockDecomposition{0, {5, 2}}, 1, 2, 1, 0};
  EXPECT_EQ(word_of(p.B).str(), "0101001");
  EXPECT_EQ(cut_word(p).str(), "101001");
  EXPECT_EQ(quotient_word(p).str(), "011");
}

TEST(ReflSubsequence, Examples) {
  Subsequence p = Subsequence::parse("((1; 1,3,4,1,5); 2,5; 1,3)");
  EXPECT_EQ(to_string(refl_subsequence(p)), "((1; 1,5,1,4,3); 2,5; 3,1)");
  Subsequence f = Subsequence::parse("((0; 2,3,2); 1,3; 1,1)");
  EXPECT_EQ(refl_subsequence(f), f);
}

TEST(ReflSubsequence, Properties) {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 10000) {
    BlockDecomposition b = random_decomposition(rng, 6, 4);
    if (weight(b) > 14 || weight(b) < 3) continue;
    const int total = weight(b) + 2;
    for (int l = 5; l <= total; l += 2) {
      for (const Subsequence& p : enumerate_subsequences(b, l)) {
        Subsequence r = refl_subsequence(p);
        ASSERT_TRUE(is_valid(r));
        ASSERT_EQ(refl_subsequence(r), p);
        ASSERT_EQ(letter_length(r), l);
        ASSERT_EQ(r.s, p.s);
        ASSERT_EQ(r.t, p.t);
        Word c = cut_word(p), cr = cut_word(r);
        const bool reverse = cr == reversed(c);
        const bool dual_word = cr == reversed(flipped(c));
        ASSERT_TRUE(reverse || dual_word) << to_string(p);
        if (r == p) ASSERT_TRUE(is_trivial(c)) << to_string(p);
        if (r != p && !is_trivial(c)) ASSERT_EQ(quotient_word(p), quotient_word(r)) << to_string(p);
        ++checked;
      }
    }
  }
}
