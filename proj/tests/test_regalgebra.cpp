#include <gtest/gtest.h>

#include <functional>

#include "mzv/numerics.hpp"
#include "mzv/regalgebra.hpp"

using namespace mzv;

namespace {

ZetaComposition z(std::initializer_list<int> a) { return ZetaComposition{a}; }

std::string bits_of(unsigned value, int len) {
  std::string s;
  for (int i = len - 1; i >= 0; --i) s.push_back((value >> i) & 1 ? '1' : '0');
  return s;
}

// Every interleaving of u and v, listed one by one.
void interleavings(const std::string& u, const std::string& v, const std::string& acc,
                   std::map<std::string, int>& out) {
  if (u.empty() && v.empty()) {
    ++out[acc];
    return;
  }
  if (!u.empty()) interleavings(u.substr(1), v, acc + u[0], out);
  if (!v.empty()) interleavings(u, v.substr(1), acc + v[0], out);
}

// Lower-precision residual check used for numeric invariants.
bool near_zero(const BigReal& x, int digits) { return log10_abs(x) < -digits; }

}  // namespace

TEST(LinComb, PrunesZeros) {
  WordComb c;
  c.add(Word("0101"), 2);
  c.add(Word("0101"), -2);
  EXPECT_TRUE(c.empty());
  c.add(Word("011"), Rational(1, 3));
  WordComb d = c * Rational(3);
  EXPECT_EQ(d.coeff(Word("011")), 1);
  EXPECT_TRUE((d - d).empty());
}

TEST(Divergence, WorkedExample) {
  WordComb r = divergence_relation(Word("0010111"));
  WordComb expect;
  expect.add(Word("0100111"), -2);
  expect.add(Word("0101011"), -1);
  expect.add(Word("0101101"), -1);
  EXPECT_EQ(r, expect);
}

TEST(Divergence, SingleTerm) {
  WordComb expect;
  expect.add(Word("01001"), -2);
  EXPECT_EQ(divergence_relation(Word("00101")), expect);
}

TEST(Divergence, RejectsWrongShape) {
  EXPECT_THROW(divergence_relation(Word("0101")), std::invalid_argument);
  EXPECT_THROW(divergence_relation(Word("0000")), std::invalid_argument);
  EXPECT_THROW(divergence_relation(Word("00110")), std::invalid_argument);
}

TEST(Divergence, OutputsStartWithOne) {
  for (int len = 4; len <= 11; ++len)
    for (unsigned v = 0; v < (1u << len); ++v) {
      std::string s = bits_of(v, len);
      if (s[0] != '0' || s[1] != '0' || s.back() != '1') continue;
      if (s.find('1', 1) == s.size() - 1) continue;
      for (const auto& [t, c] : divergence_relation(Word(s))) ASSERT_EQ(t.first[1], 1) << s;
    }
}

TEST(Regularise, WorkedExample) {
  ZetaComb r = regularise(Word("0010111"));
  ZetaComb expect;
  expect.add(z({2, 3}), 2);
  expect.add(z({3, 2}), 1);
  expect.add(z({1, 4}), 6);
  EXPECT_EQ(r, expect);
}

TEST(Regularise, ConvergentWords) {
  EXPECT_EQ(regularise(Word("0101")), ZetaComb(z({2}), -1));
  EXPECT_EQ(regularise(Word("010101")), ZetaComb(z({2, 2}), 1));
  EXPECT_EQ(regularise(Word("01")), ZetaComb(ZetaComposition{}, 1));
  EXPECT_EQ(regularise(Word("10")), ZetaComb(ZetaComposition{}, 1));
  EXPECT_TRUE(regularise(Word("0110")).empty());
  EXPECT_TRUE(regularise(Word("11")).empty());
}

TEST(Regularise, OutputAlwaysConvergentUpToWeight8) {
  for (int len = 2; len <= 10; ++len)
    for (unsigned v = 0; v < (1u << len); ++v)
      for (const auto& [t, c] : regularise(Word(bits_of(v, len)))) ASSERT_TRUE(t.first.is_convergent());
}

TEST(Regularise, Linear) {
  WordComb c;
  c.add(Word("0010111"), Rational(3, 2));
  c.add(Word("1001"), -4);
  ZetaComb expect = regularise(Word("0010111")) * Rational(3, 2) - regularise(Word("1001")) * Rational(4);
  EXPECT_EQ(regularise(c), expect);
}

TEST(Regularise, DualityInvarianceNumeric) {
  for (int len = 3; len <= 8; ++len)
    for (unsigned v = 0; v < (1u << len); ++v) {
      Word w(bits_of(v, len));
      if (w.front() == w.back()) continue;
      Signed<Word> d = dual(w);
      BigReal diff = eval_lincomb(regularise(w) - regularise(d.value) * Rational(d.sign), 30);
      ASSERT_TRUE(near_zero(diff, 30)) << w.str();
    }
}

TEST(Shuffle, Examples) {
  WordComb s = shuffle_words("10", "10");
  WordComb expect;
  expect.add(Word("010101"), 2);
  expect.add(Word("011001"), 4);
  EXPECT_EQ(s, expect);
  EXPECT_EQ(shuffle_words("", "10"), WordComb(Word("0101")));
  WordComb two;
  two.add(Word("0011"), 1);
  two.add(Word("0101"), 1);
  EXPECT_EQ(shuffle_words("0", "1"), two);
}

TEST(Shuffle, MatchesEnumerationOracle) {
  const std::vector<std::string> words = {"", "1", "10", "110", "100", "1010", "011", "10010"};
  for (const auto& u : words)
    for (const auto& v : words) {
      std::map<std::string, int> oracle;
      interleavings(u, v, "", oracle);
      WordComb expect;
      for (const auto& [s, n] : oracle) expect.add(Word("0" + s + "1"), n);
      ASSERT_EQ(shuffle_words(u, v), expect) << u << " x " << v;
    }
}

TEST(Shuffle, HomomorphismNumeric) {
  const std::vector<std::string> words = {"10", "100", "110", "1010", "1100", "10100", "11000"};
  for (const auto& u : words)
    for (const auto& v : words) {
      BigReal lhs = eval_lincomb(regularise(Word("0" + u + "1")), 30) *
                    eval_lincomb(regularise(Word("0" + v + "1")), 30);
      BigReal rhs = eval_lincomb(regularise(shuffle_words(u, v)), 30);
      ASSERT_TRUE(near_zero(lhs - rhs, 30)) << u << " x " << v;
    }
}

TEST(Stuffle, Examples) {
  ZetaComb a;
  a.add(z({2, 3}), 1);
  a.add(z({3, 2}), 1);
  a.add(z({5}), 1);
  EXPECT_EQ(stuffle_depth1(2, z({3})), a);
  ZetaComb b;
  b.add(z({2, 2}), 2);
  b.add(z({4}), 1);
  EXPECT_EQ(stuffle_depth1(2, z({2})), b);
  EXPECT_THROW(stuffle_depth1(1, z({2})), std::invalid_argument);
}

TEST(Stuffle, AgreesWithShuffleNumerically) {
  const std::vector<ZetaComposition> ss = {z({2}), z({3}), z({1, 2}), z({2, 2}), z({1, 3}), z({1, 1, 4}), z({2, 1, 3})};
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : ss) {
      BigReal stuffle = eval_lincomb(stuffle_depth1(n, s), 30);
      Signed<Word> a = mzv_to_word(ZetaComposition{{n}});
      Signed<Word> b = mzv_to_word(s);
      BigReal shuffle = eval_lincomb(regularise(shuffle_words(a.value.interior(), b.value.interior())), 30);
      if (a.sign * b.sign < 0) shuffle = scale(shuffle, -1);
      ASSERT_TRUE(near_zero(stuffle - shuffle, 30)) << n << " " << to_string(s);
    }
}

TEST(Constants, EvenZeta) {
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(zeta_even_coeff(1), (PiRational{Rational(1, 6), 2}));
  EXPECT_EQ(zeta_even_coeff(2), (PiRational{Rational(1, 90), 4}));
  EXPECT_EQ(zeta_even_coeff(3), (PiRational{Rational(1, 945), 6}));
  EXPECT_EQ(zeta_twos_coeff(2), (PiRational{Rational(1, 120), 4}));
  EXPECT_THROW(zeta_even_coeff(0), std::invalid_argument);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
}
