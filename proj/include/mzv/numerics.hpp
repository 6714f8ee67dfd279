#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mzv/regalgebra.hpp"

#include <mpfr.h>

namespace mzv {

// Owning wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits = 64);
  Mpfr(const Mpfr& o);
  Mpfr(Mpfr&& o) noexcept;
  Mpfr& operator=(const Mpfr& o);
  Mpfr& operator=(Mpfr&& o) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits) const;

 private:
  mpfr_t value_;
};

// value with |true - value| <= err.
struct BigReal {
  Mpfr value;
  Mpfr err;
  int prec_digits = 0;

  std::string to_string(int digits) const { return value.to_string(digits); }
  double abs_error() const { return err.to_double(); }
};

int bits_for_digits(int digits);

BigReal big_zero(int digits);
BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
// Throws std::domain_error when b may be zero within its error.
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal scale(const BigReal& a, const Rational& q);
// Approximate log10 |x|; very negative for 0.
double log10_abs(const BigReal& x);

class MzvEvaluator {
 public:
  MzvEvaluator();
  explicit MzvEvaluator(std::optional<std::string> cache_path);

  BigReal zeta(const ZetaComposition& s, int digits);
  BigReal pi_power(int exponent, int digits);
  BigReal eval(const ZetaComb& c, int digits);
  BigReal eval(const WordComb& c, int digits);

  std::size_t cache_size() const;

  // Process-wide evaluator; honours MZV_CACHE_PATH.
  static MzvEvaluator& shared();

 private:
  struct Entry {
    int digits;
    std::string decimal;
  };

  int bucket(int digits) const;
  void load_cache();
  void persist(const ZetaComposition& s, int digits, const std::string& decimal);

  mutable std::mutex mutex_;
  std::map<std::pair<ZetaComposition, int>, BigReal> memo_;
  std::map<ZetaComposition, Entry> stored_;
  std::optional<std::string> cache_path_;
};

BigReal eval_mzv(const ZetaComposition& s, int digits);
BigReal eval_lincomb(const ZetaComb& c, int digits);

// Rational approximation by continued-fraction convergents; needs
// 2 log10(max_den) + 20 correct digits in x.
std::optional<Rational> recognize_rational(const BigReal& x, const mpz_class& max_den);

}  // namespace mzv
