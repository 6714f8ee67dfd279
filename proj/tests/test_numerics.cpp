#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "mzv/identities.hpp"
#include "mzv/numerics.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

namespace {

constexpr mpfr_prec_t kOracleBits = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kOracleBits), mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, kOracleBits), mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// I(0; a_1..a_n; z) for a_1 = 1 as a power series in z, truncated at order m.
Real series_at(const std::string& letters, const Real& z, int m) {
  std::vector<Real> c(static_cast<std::size_t>(m) + 1);
  mpfr_set_ui(c[0].get(), 1, MPFR_RNDN);
  for (char a : letters) {
    std::vector<Real> next(c.size());
    if (a == '1') {
      // multiply by -1/(1-u) then integrate
      Real run;
      for (int k = 0; k < m; ++k) {
        mpfr_sub(run.get(), run.get(), c[k].get(), MPFR_RNDN);
        mpfr_div_ui(next[k + 1].get(), run.get(), k + 1, MPFR_RNDN);
      }
    } else {
      for (int k = 1; k <= m; ++k) mpfr_div_ui(next[k].get(), c[k].get(), k, MPFR_RNDN);
    }
    c = std::move(next);
  }
  Real sum, power;
  mpfr_set_ui(power.get(), 1, MPFR_RNDN);
  for (int k = 0; k <= m; ++k) {
    Real t;
    mpfr_mul(t.get(), c[k].get(), power.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
    mpfr_mul(power.get(), power.get(), z.get(), MPFR_RNDN);
  }
  return sum;
}

// Path composition at 1/3:
//   I(0; w; 1) = sum_j I(0; w_1..w_j; 1/3) I(1/3; w_{j+1}..w_n; 1),
// with the second factor mapped by t -> 1 - t onto a series at 2/3. The
// coefficients are bounded by (1 + log k)^n, so order m = 600 leaves a tail
// below (1 + log 600)^14 (2/3)^600 < 1e-95.
Real oracle_zeta(const std::vector<int>& s) {
  std::string w;
  for (int x : s) w += "1" + std::string(static_cast<std::size_t>(x - 1), '0');
  const int n = static_cast<int>(w.size());
  const int m = 600;
  Real third, two_thirds;
  mpfr_set_ui(third.get(), 1, MPFR_RNDN);
  mpfr_div_ui(third.get(), third.get(), 3, MPFR_RNDN);
  mpfr_ui_sub(two_thirds.get(), 1, third.get(), MPFR_RNDN);
  Real total;
  for (int j = 0; j <= n; ++j) {
    Real left, right;
    mpfr_set_ui(left.get(), 1, MPFR_RNDN);
    mpfr_set_ui(right.get(), 1, MPFR_RNDN);
    if (j > 0) left = series_at(w.substr(0, j), third, m);
    if (j < n) {
      std::string tail;
      for (int i = n - 1; i >= j; --i) tail += w[i] == '0' ? '1' : '0';
      right = series_at(tail, two_thirds, m);
      if ((n - j) % 2 != 0) mpfr_neg(right.get(), right.get(), MPFR_RNDN);
    }
    Real prod;
    mpfr_mul(prod.get(), left.get(), right.get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), prod.get(), MPFR_RNDN);
  }
  if (s.size() % 2 != 0) mpfr_neg(total.get(), total.get(), MPFR_RNDN);
  return total;
}

double diff_log10(const BigReal& a, const Real& b) {
  Real d;
  mpfr_sub(d.get(), a.value.get(), b.get(), MPFR_RNDN);
  if (mpfr_zero_p(d.get())) return -1000;
  return std::log10(std::fabs(mpfr_get_d(d.get(), MPFR_RNDN)));
}

void all_compositions(int wt, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (wt == 0) {
    if (!cur.empty() && cur.back() >= 2) out.push_back(cur);
    return;
  }
  for (int x = 1; x <= wt; ++x) {
    cur.push_back(x);
    all_compositions(wt - x, cur, out);
    cur.pop_back();
  }
}

BigReal pi_power(int e, int digits) { return MzvEvaluator::shared().pi_power(e, digits); }

bool close(const BigReal& a, const BigReal& b, int digits) {
  return log10_abs(a - b) < -digits;
}

}  // namespace

TEST(EvalMzv, KnownValues) {
  EXPECT_EQ(eval_mzv({{2}}, 30).to_string(19).substr(0, 19), "1.64493406684822643");
  EXPECT_EQ(eval_mzv({{3}}, 30).to_string(19).substr(0, 19), "1.20205690315959428");
  BigReal z13 = eval_mzv({{1, 3}}, 40);
  EXPECT_TRUE(close(z13, scale(pi_power(4, 40), Rational(1, 360)), 38));
  EXPECT_EQ(z13.to_string(16).substr(0, 17), "2.705808084277845");
}

TEST(EvalMzv, DirectSummationDepthOne) {
  for (int k = 2; k <= 6; ++k) {
    // partial sum plus the midpoint of the integral tail bracket
    const long n = 200000;
    long double s = 0;
    for (long i = n; i >= 1; --i) s += std::pow(static_cast<long double>(i), -k);
    const long double lo = std::pow(static_cast<long double>(n + 1), 1 - k) / (k - 1);
    const long double hi = std::pow(static_cast<long double>(n), 1 - k) / (k - 1);
    const double v = eval_mzv({{k}}, 20).value.to_double();
    EXPECT_GE(v, static_cast<double>(s + lo) - 1e-15);
    EXPECT_LE(v, static_cast<double>(s + hi) + 1e-15);
  }
}

TEST(EvalMzv, DirectSummationDepthTwo) {
  // zeta(a, b) = sum_{m < n} m^-a n^-b, outer sum truncated at N; the tail is
  // at most the integral of (1 + log x) x^-b from N to infinity.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {1, 4}, {3, 3}, {2, 4}}) {
    const long n = 100000;
    long double s = 0, h = 0;
    for (long i = 1; i <= n; ++i) {
      s += h * std::pow(static_cast<long double>(i), -b);
      h += std::pow(static_cast<long double>(i), -a);
    }
    const double bound = std::pow(static_cast<double>(n), 1 - b) *
                         ((1 + std::log(static_cast<double>(n))) / (b - 1) + 1.0 / ((b - 1) * (b - 1)));
    const double v = eval_mzv({{a, b}}, 20).value.to_double();
    EXPECT_GE(v, static_cast<double>(s) - 1e-15);
    EXPECT_LE(v, static_cast<double>(s) + bound + 1e-15) << a << "," << b;
  }
}

TEST(EvalMzv, AgreesWithSeriesOracleUpToWeightSix) {
  for (int wt = 2; wt <= 6; ++wt) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    all_compositions(wt, cur, comps);
    for (const auto& s : comps) {
      BigReal v = eval_mzv({s}, 30);
      ASSERT_LT(v.abs_error(), 1e-30);
      ASSERT_LT(diff_log10(v, oracle_zeta(s)), -30) << to_string(ZetaComposition{s});
    }
  }
}

TEST(EvalMzv, Errors) {
  EXPECT_THROW(eval_mzv({{2, 1}}, 20), std::invalid_argument);
  EXPECT_THROW(eval_mzv({{2}}, 5), std::invalid_argument);
  EXPECT_THROW(eval_mzv({{2}}, 100000), std::invalid_argument);
}

TEST(EvalMzv, TwosClosedForm) {
  for (int m = 1; m <= 8; ++m) {
    BigReal v = eval_mzv(twos(m), 40);
    BigReal expect = scale(pi_power(2 * m, 40), Rational(mpz_class(1), mpz_class(factorial(2 * m + 1))));
    EXPECT_TRUE(close(v, expect, 39)) << m;
  }
}

TEST(EvalMzv, MonotonePrecision) {
  for (const auto& s : std::vector<std::vector<int>>{{3}, {1, 2, 3}, {2, 1, 1, 4}}) {
    BigReal lo = eval_mzv({s}, 20), hi = eval_mzv({s}, 60);
    EXPECT_LE(hi.abs_error(), lo.abs_error());
    BigReal d = lo - hi;
    EXPECT_LE(std::fabs(d.value.to_double()), lo.abs_error() + hi.abs_error());
  }
}

TEST(EvalLincomb, Examples) {
  ZetaComb c(ZetaComposition{{1, 2}});
  c.add(ZetaComposition{{3}}, -1);
  EXPECT_LT(log10_abs(eval_lincomb(c, 50)), -50);
  EXPECT_LT(log10_abs(eval_lincomb(ZetaComb(), 20)), -20);
  EXPECT_EQ(eval_lincomb(ZetaComb(), 20).value.to_double(), 0.0);

  ZetaComb pi;
  pi.add(ZetaComposition{}, Rational(1, 6), 2);
  pi.add(ZetaComposition{{2}}, -1);
  EXPECT_LT(log10_abs(eval_lincomb(pi, 40)), -40);
}

TEST(EvalWords, ShuffleConsistency) {
  MzvEvaluator& ev = MzvEvaluator::shared();
  const std::vector<std::string> words = {"10", "100", "110", "1010", "1100", "10010", "11000"};
  for (const auto& u : words)
    for (const auto& v : words) {
      BigReal a = ev.eval(WordComb(Word("0" + u + "1")), 30);
      BigReal b = ev.eval(WordComb(Word("0" + v + "1")), 30);
      BigReal p = ev.eval(shuffle_words(u, v), 30);
      EXPECT_TRUE(close(a * b, p, 29)) << u << " " << v;
    }
}

TEST(BigRealOps, ErrorPropagation) {
  BigReal a = eval_mzv({{2}}, 30), b = eval_mzv({{3}}, 30);
  for (const BigReal& r : {a + b, a - b, a * b, a / b, scale(a, Rational(7, 3))}) {
    EXPECT_GT(r.abs_error(), 0);
    EXPECT_LT(r.abs_error(), 1e-29);
  }
  EXPECT_TRUE(close((a / b) * b, a, 29));
  EXPECT_THROW(a / (b - b), std::domain_error);
}

TEST(Recognize, Examples) {
  BigReal half = scale(pi_power(0, 40), Rational(1, 2));
  auto q = recognize_rational(half, 1000);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, Rational(1, 2));

  Identity sym = gen_symmetric(BlockDecomposition{0, {2, 4, 4}});
  auto r = recognize_rational(zeta_ratio(sym, 60), 1000000);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, Rational(5, 96));

  WordComb cyclic;
  for (const auto& l : std::vector<std::vector<int>>{{1, 1, 2, 3, 3}, {1, 2, 3, 3, 1}, {2, 3, 3, 1, 1},
                                                      {3, 3, 1, 1, 2}, {3, 1, 1, 2, 3}})
    cyclic.add(block_word(l), 1);
  MzvEvaluator& ev = MzvEvaluator::shared();
  BigReal ratio = ev.eval(cyclic, 60) / pi_power(8, 60);
  ratio = scale(ratio, Rational(mpz_class(factorial(9))));
  EXPECT_EQ(ratio.to_string(10).substr(0, 11), "2.789973142");
  EXPECT_FALSE(recognize_rational(ratio, 1000000));
}

TEST(Verify, CyclicFullAndNaiveSum) {
  VerificationReport full = verify(gen_cyclic_full({1, 1, 2, 3}), 30);
  EXPECT_EQ(full.status, VerifyStatus::Verified);
  EXPECT_GE(full.digits_matched, 30);

  Identity naive = gen_cyclic_full({1, 1, 2, 3});
  naive.lhs = WordComb();
  for (const auto& l : std::vector<std::vector<int>>{{1, 1, 2, 3}, {1, 2, 3, 1}, {2, 3, 1, 1}, {3, 1, 1, 2}})
    naive.lhs.add(block_word(l), 1);
  VerificationReport bad = verify(naive, 30);
  EXPECT_EQ(bad.status, VerifyStatus::Refuted);
  BigReal expect = scale(eval_mzv({{2}}, 40) * eval_mzv({{3}}, 40), 2);
  EXPECT_TRUE(close(bad.residual, expect, 29));
}

TEST(Verify, HoffmanAtZero) {
  VerificationReport rep = verify(gen_hoffman(0, 0, 0), 40);
  EXPECT_EQ(rep.status, VerifyStatus::Verified);
  EXPECT_LT(log10_abs(rep.residual), -40);
}

TEST(Verify, ClassifyResidual) {
  BigReal tiny = scale(eval_mzv({{2}}, 60), Rational(1, mpz_class("1000000000000000000000000000000000000000000")));
  EXPECT_EQ(classify_residual(tiny, 30), VerifyStatus::Verified);
  EXPECT_EQ(classify_residual(eval_mzv({{2}}, 30), 30), VerifyStatus::Refuted);
  BigReal fuzzy = eval_mzv({{2}}, 10) - eval_mzv({{2}}, 10);
  fuzzy = scale(fuzzy, 1) + scale(eval_mzv({{2}}, 60), Rational(1, mpz_class("100000000000000000000")));
  EXPECT_NE(classify_residual(fuzzy, 30), VerifyStatus::Verified);
}

TEST(Cache, PersistsLineRecords) {
  const std::string path = (std::filesystem::temp_directory_path() / "mzv_cache_test.txt").string();
  std::filesystem::remove(path);
  BigReal first;
  {
    MzvEvaluator ev(path);
    first = ev.zeta({{1, 2, 3}}, 30);
    ev.zeta({{5}}, 30);
    EXPECT_GE(ev.cache_size(), 2u);
  }
  std::ifstream in(path);
  std::string line;
  const std::regex record(R"(z\([0-9,]+\) [0-9]+ -?[0-9.]+([eE][-+]?[0-9]+)?)");
  int lines = 0;
  while (std::getline(in, line)) {
    EXPECT_TRUE(std::regex_match(line, record)) << line;
    ++lines;
  }
  EXPECT_GE(lines, 2);
  MzvEvaluator again(path);
  EXPECT_GE(again.cache_size(), 2u);
  BigReal second = again.zeta({{1, 2, 3}}, 30);
  EXPECT_TRUE(close(first, second, 29));
  std::filesystem::remove(path);
}
