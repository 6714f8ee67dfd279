#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace mzv {

using Rational = mpq_class;

// q * pi^pi_exp with pi_exp even and non-negative.
struct PiRational {
  Rational coeff;
  int pi_exp = 0;

  bool is_zero() const { return sgn(coeff) == 0; }
  bool operator==(const PiRational& o) const { return coeff == o.coeff && pi_exp == o.pi_exp; }
};

PiRational operator*(const PiRational& a, const PiRational& b);

// Finite formal sum over (Key, pi exponent) with exact rational coefficients.
// Zero coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using Term = std::pair<Key, int>;
  using Map = std::map<Term, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& key, const Rational& c = 1, int pi_exp = 0) { add(key, c, pi_exp); }

  void add(const Key& key, const Rational& c, int pi_exp = 0) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(Term{key, pi_exp}, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = 1, int pi_shift = 0) {
    if (sgn(scale) == 0) return;
    for (const auto& [term, c] : other.terms_) add(term.first, c * scale, term.second + pi_shift);
  }

  Rational coeff(const Key& key, int pi_exp = 0) const {
    auto it = terms_.find(Term{key, pi_exp});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool has_pi() const {
    for (const auto& [term, c] : terms_)
      if (term.second != 0) return true;
    return false;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, Rational(-1));
    return *this;
  }
  LinComb& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [term, c] : terms_) c *= q;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(LinComb a, const Rational& q) { return a *= q; }
  friend LinComb operator*(const Rational& q, LinComb a) { return a *= q; }
  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

}  // namespace mzv
