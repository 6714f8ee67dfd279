#include "mzv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mzv {

namespace {

constexpr mpfr_prec_t kErrBits = 64;
constexpr int kMaxDigits = 5000;

Mpfr err_value(double x) {
  Mpfr e(kErrBits);
  mpfr_set_d(e.get(), x, MPFR_RNDU);
  return e;
}

// 2^{-bits} as an error quantity.
Mpfr pow2_neg(long bits) {
  Mpfr e(kErrBits);
  mpfr_set_ui_2exp(e.get(), 1, -bits, MPFR_RNDU);
  return e;
}

Mpfr abs_upper(const Mpfr& x) {
  Mpfr a(kErrBits);
  mpfr_abs(a.get(), x.get(), MPFR_RNDU);
  return a;
}

// err += |x| * 2^{-prec(x)}
void add_rounding(Mpfr& err, const Mpfr& x) {
  Mpfr r = abs_upper(x);
  mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(x.precision()), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), r.get(), MPFR_RNDU);
}

}  // namespace

Mpfr::Mpfr(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& o) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, o.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

std::string Mpfr::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

int bits_for_digits(int digits) { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 32; }

BigReal big_zero(int digits) {
  return BigReal{Mpfr(bits_for_digits(digits)), err_value(0), digits};
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r{Mpfr(std::max(a.value.precision(), b.value.precision())), Mpfr(kErrBits), std::min(a.prec_digits, b.prec_digits)};
  mpfr_add(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  mpfr_add(r.err.get(), a.err.get(), b.err.get(), MPFR_RNDU);
  add_rounding(r.err, r.value);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal nb = b;
  mpfr_neg(nb.value.get(), nb.value.get(), MPFR_RNDN);
  return a + nb;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r{Mpfr(std::max(a.value.precision(), b.value.precision())), Mpfr(kErrBits), std::min(a.prec_digits, b.prec_digits)};
  mpfr_mul(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  Mpfr t1 = abs_upper(a.value);
  mpfr_mul(t1.get(), t1.get(), b.err.get(), MPFR_RNDU);
  Mpfr t2 = abs_upper(b.value);
  mpfr_mul(t2.get(), t2.get(), a.err.get(), MPFR_RNDU);
  Mpfr t3(kErrBits);
  mpfr_mul(t3.get(), a.err.get(), b.err.get(), MPFR_RNDU);
  mpfr_add(r.err.get(), t1.get(), t2.get(), MPFR_RNDU);
  mpfr_add(r.err.get(), r.err.get(), t3.get(), MPFR_RNDU);
  add_rounding(r.err, r.value);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  Mpfr margin = abs_upper(b.value);
  mpfr_sub(margin.get(), margin.get(), b.err.get(), MPFR_RNDD);
  if (mpfr_sgn(margin.get()) <= 0) throw std::domain_error("division by a value indistinguishable from zero");
  BigReal r{Mpfr(std::max(a.value.precision(), b.value.precision())), Mpfr(kErrBits), std::min(a.prec_digits, b.prec_digits)};
  mpfr_div(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  // (err_a + |a/b| err_b) / (|b| - err_b)
  Mpfr t = abs_upper(r.value);
  mpfr_mul(t.get(), t.get(), b.err.get(), MPFR_RNDU);
  mpfr_add(t.get(), t.get(), a.err.get(), MPFR_RNDU);
  mpfr_div(r.err.get(), t.get(), margin.get(), MPFR_RNDU);
  add_rounding(r.err, r.value);
  return r;
}

BigReal scale(const BigReal& a, const Rational& q) {
  BigReal r{Mpfr(a.value.precision()), Mpfr(kErrBits), a.prec_digits};
  mpfr_mul_q(r.value.get(), a.value.get(), q.get_mpq_t(), MPFR_RNDN);
  Mpfr qa(kErrBits);
  mpfr_set_q(qa.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(qa.get(), qa.get(), MPFR_RNDU);
  mpfr_mul(r.err.get(), qa.get(), a.err.get(), MPFR_RNDU);
  add_rounding(r.err, r.value);
  return r;
}

double log10_abs(const BigReal& x) {
  if (mpfr_zero_p(x.value.get())) return -1e9;
  Mpfr l(kErrBits);
  mpfr_abs(l.get(), x.value.get(), MPFR_RNDN);
  mpfr_log10(l.get(), l.get(), MPFR_RNDN);
  return l.to_double();
}

namespace {

// Coefficients of I(0; prefix; t) as a power series in t, extended one
// letter at a time.  Letter 0 integrates dt/t, letter 1 integrates dt/(t-1).
class PrefixSeries {
 public:
  PrefixSeries(int terms, mpfr_prec_t bits)
      : coeffs_(static_cast<std::size_t>(terms) + 1, Mpfr(bits)), sum_(bits), held_(bits), tmp_(bits) {
    mpfr_set_ui(coeffs_[0].get(), 1, MPFR_RNDN);
  }

  void push(char letter) {
    const std::size_t m_max = coeffs_.size() - 1;
    if (letter == '0') {
      for (std::size_t m = 1; m <= m_max; ++m) mpfr_div_ui(coeffs_[m].get(), coeffs_[m].get(), m, MPFR_RNDN);
    } else {
      // new f_m = -(old f_0 + ... + old f_{m-1}) / m
      mpfr_set_zero(sum_.get(), 1);
      mpfr_set(held_.get(), coeffs_[0].get(), MPFR_RNDN);
      for (std::size_t m = 1; m <= m_max; ++m) {
        mpfr_add(sum_.get(), sum_.get(), held_.get(), MPFR_RNDN);
        mpfr_swap(held_.get(), coeffs_[m].get());
        mpfr_div_ui(coeffs_[m].get(), sum_.get(), m, MPFR_RNDN);
        mpfr_neg(coeffs_[m].get(), coeffs_[m].get(), MPFR_RNDN);
      }
    }
    mpfr_set_zero(coeffs_[0].get(), 1);
  }

  // Value at t = 1/2.
  void at_half(Mpfr& out) {
    mpfr_set_zero(out.get(), 1);
    for (std::size_t m = coeffs_.size(); m-- > 0;) {
      mpfr_mul_2si(tmp_.get(), coeffs_[m].get(), -static_cast<long>(m), MPFR_RNDN);
      mpfr_add(out.get(), out.get(), tmp_.get(), MPFR_RNDN);
    }
  }

 private:
  std::vector<Mpfr> coeffs_;
  Mpfr sum_;
  Mpfr held_;
  Mpfr tmp_;
};

std::vector<Mpfr> prefix_values_at_half(std::string_view letters, int terms, mpfr_prec_t bits) {
  std::vector<Mpfr> values;
  values.reserve(letters.size() + 1);
  Mpfr one(bits);
  mpfr_set_ui(one.get(), 1, MPFR_RNDN);
  values.push_back(one);
  PrefixSeries series(terms, bits);
  for (char c : letters) {
    series.push(c);
    Mpfr v(bits);
    series.at_half(v);
    values.push_back(std::move(v));
  }
  return values;
}

// zeta(s) via the path split at 1/2: I(0;u;1) = sum_i I(0;u[:i];1/2) I(1/2;u[i:];1),
// and I(1/2;q;1) = (-1)^{|q|} I(0;reverse(flip(q));1/2).  Every factor is a
// power series with coefficients bounded by 1, so truncating at M terms costs
// at most 2^{-M} per factor; the product sum is off by at most 3(N+1)2^{-M}.
// Rounding: each coefficient picks up at most (M+1)2^{-p} per letter, which
// gives the 4(N+1)^2(M+2)2^{-p} term below.
BigReal compute_zeta(const ZetaComposition& s, int digits) {
  const Signed<Word> w = mzv_to_word(s);
  const std::string_view u = w.value.interior();
  const int n = static_cast<int>(u.size());
  const double target_bits = digits * 3.3219280948873623;
  const int terms = static_cast<int>(std::ceil(target_bits + std::log2(3.0 * (n + 1)))) + 2;
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(
      std::ceil(target_bits + 2 * std::log2(static_cast<double>(n + 1) * (terms + 2))) + 32);

  std::string v(u.rbegin(), u.rend());
  for (char& c : v) c = c == '0' ? '1' : '0';
  std::vector<Mpfr> left = prefix_values_at_half(u, terms, bits);
  std::vector<Mpfr> right = prefix_values_at_half(v, terms, bits);

  BigReal r{Mpfr(bits), Mpfr(kErrBits), digits};
  Mpfr prod(bits);
  for (int i = 0; i <= n; ++i) {
    mpfr_mul(prod.get(), left[i].get(), right[n - i].get(), MPFR_RNDN);
    if ((n - i) % 2)
      mpfr_sub(r.value.get(), r.value.get(), prod.get(), MPFR_RNDN);
    else
      mpfr_add(r.value.get(), r.value.get(), prod.get(), MPFR_RNDN);
  }
  if (w.sign < 0) mpfr_neg(r.value.get(), r.value.get(), MPFR_RNDN);

  Mpfr tail = pow2_neg(terms);
  mpfr_mul_ui(tail.get(), tail.get(), 3 * static_cast<unsigned long>(n + 1), MPFR_RNDU);
  Mpfr rounding = pow2_neg(static_cast<long>(bits));
  mpfr_mul_ui(rounding.get(), rounding.get(), 4ul * (n + 1) * (n + 1) * static_cast<unsigned long>(terms + 2), MPFR_RNDU);
  mpfr_add(r.err.get(), tail.get(), rounding.get(), MPFR_RNDU);
  return r;
}

}  // namespace

MzvEvaluator::MzvEvaluator() : MzvEvaluator(std::nullopt) {}

MzvEvaluator::MzvEvaluator(std::optional<std::string> cache_path) : cache_path_(std::move(cache_path)) {
  load_cache();
}

MzvEvaluator& MzvEvaluator::shared() {
  static MzvEvaluator instance([]() -> std::optional<std::string> {
    const char* env = std::getenv("MZV_CACHE_PATH");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return std::string(env);
  }());
  return instance;
}

int MzvEvaluator::bucket(int digits) const {
  if (digits < 10) throw std::invalid_argument("at least 10 digits are required");
  if (digits > kMaxDigits) throw std::invalid_argument("digits beyond the configured ceiling");
  return (digits + 9) / 10 * 10;
}

std::size_t MzvEvaluator::cache_size() const {
  std::lock_guard lock(mutex_);
  return stored_.size();
}

void MzvEvaluator::load_cache() {
  if (!cache_path_) return;
  std::ifstream in(*cache_path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string comp, decimal;
    int digits = 0;
    if (!(fields >> comp >> digits >> decimal)) continue;
    try {
      ZetaComposition s = ZetaComposition::parse(comp);
      auto it = stored_.find(s);
      if (it == stored_.end() || it->second.digits < digits) stored_[s] = Entry{digits, decimal};
    } catch (const std::exception&) {
      continue;
    }
  }
}

void MzvEvaluator::persist(const ZetaComposition& s, int digits, const std::string& decimal) {
  if (!cache_path_) return;
  std::ofstream out(*cache_path_, std::ios::app);
  out << to_string(s) << ' ' << digits << ' ' << decimal << '\n';
}

BigReal MzvEvaluator::zeta(const ZetaComposition& s, int digits) {
  const int d = bucket(digits);
  if (s.args.empty()) {
    BigReal one = big_zero(d);
    mpfr_set_ui(one.value.get(), 1, MPFR_RNDN);
    return one;
  }
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find({s, d});
    if (it != memo_.end()) return it->second;
    auto st = stored_.find(s);
    if (st != stored_.end() && st->second.digits >= d) {
      BigReal r = big_zero(d);
      if (mpfr_set_str(r.value.get(), st->second.decimal.c_str(), 10, MPFR_RNDN) == 0) {
        r.err = err_value(0);
        mpfr_set_ui(r.err.get(), 2, MPFR_RNDU);
        Mpfr scale10(kErrBits);
        mpfr_ui_pow_ui(scale10.get(), 10, static_cast<unsigned long>(st->second.digits), MPFR_RNDD);
        mpfr_div(r.err.get(), r.err.get(), scale10.get(), MPFR_RNDU);
        memo_.emplace(std::make_pair(s, d), r);
        return r;
      }
    }
  }
  BigReal r = compute_zeta(s, d);
  std::lock_guard lock(mutex_);
  if (memo_.emplace(std::make_pair(s, d), r).second) {
    auto st = stored_.find(s);
    if (st == stored_.end() || st->second.digits < d) {
      std::string decimal = r.value.to_string(d + 20);
      stored_[s] = Entry{d, decimal};
      persist(s, d, decimal);
    }
  }
  return r;
}

BigReal MzvEvaluator::pi_power(int exponent, int digits) {
  const int d = bucket(digits);
  const mpfr_prec_t bits = bits_for_digits(d) + 16;
  BigReal r{Mpfr(bits), Mpfr(kErrBits), d};
  mpfr_const_pi(r.value.get(), MPFR_RNDN);
  mpfr_pow_ui(r.value.get(), r.value.get(), static_cast<unsigned long>(exponent), MPFR_RNDN);
  r.err = abs_upper(r.value);
  mpfr_mul_ui(r.err.get(), r.err.get(), static_cast<unsigned long>(2 * exponent + 2), MPFR_RNDU);
  mpfr_mul_2si(r.err.get(), r.err.get(), -static_cast<long>(bits), MPFR_RNDU);
  return r;
}

BigReal MzvEvaluator::eval(const ZetaComb& c, int digits) {
  BigReal total = big_zero(bucket(digits));
  for (const auto& [term, coeff] : c) {
    BigReal v = zeta(term.first, digits);
    if (term.second != 0) v = v * pi_power(term.second, digits);
    total = total + scale(v, coeff);
  }
  return total;
}

BigReal MzvEvaluator::eval(const WordComb& c, int digits) { return eval(regularise(c), digits); }

BigReal eval_mzv(const ZetaComposition& s, int digits) {
  if (!s.is_convergent()) throw std::invalid_argument("composition " + to_string(s) + " is not convergent");
  return MzvEvaluator::shared().zeta(s, digits);
}

BigReal eval_lincomb(const ZetaComb& c, int digits) { return MzvEvaluator::shared().eval(c, digits); }

std::optional<Rational> recognize_rational(const BigReal& x, const mpz_class& max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const double needed = 2.0 * std::log10(max_den.get_d()) + 20.0;
  Mpfr tol(kErrBits);
  mpfr_set_ui(tol.get(), 10, MPFR_RNDD);
  mpfr_pow_si(tol.get(), tol.get(), -static_cast<long>(std::ceil(needed)), MPFR_RNDD);
  if (mpfr_cmp(x.err.get(), tol.get()) > 0) return std::nullopt;
  mpfr_add(tol.get(), tol.get(), x.err.get(), MPFR_RNDU);

  const mpfr_prec_t bits = x.value.precision();
  Mpfr y = x.value;
  Mpfr frac(bits);
  Mpfr diff(bits);
  mpz_class a, p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  for (int iter = 0; iter < 400; ++iter) {
    mpfr_floor(frac.get(), y.get());
    mpfr_get_z(a.get_mpz_t(), frac.get(), MPFR_RNDN);
    mpz_class p = a * p1 + p2;
    mpz_class q = a * q1 + q2;
    if (q > max_den) break;
    Rational cand(p, q);
    cand.canonicalize();
    mpfr_set_q(diff.get(), cand.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(diff.get(), diff.get(), x.value.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    if (mpfr_cmp(diff.get(), tol.get()) <= 0) return cand;
    mpfr_sub(frac.get(), y.get(), frac.get(), MPFR_RNDN);
    if (mpfr_zero_p(frac.get())) break;
    mpfr_ui_div(y.get(), 1, frac.get(), MPFR_RNDN);
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return std::nullopt;
}

}  // namespace mzv
