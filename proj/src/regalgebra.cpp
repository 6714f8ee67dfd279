#include "mzv/regalgebra.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace mzv {

PiRational operator*(const PiRational& a, const PiRational& b) {
  return {a.coeff * b.coeff, a.pi_exp + b.pi_exp};
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

using InteriorMap = std::map<std::string, Rational>;

void accumulate(InteriorMap& m, const std::string& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) m.erase(it);
  }
}

std::vector<int> run_lengths_after_ones(std::string_view v) {
  std::vector<int> ns;
  for (char c : v) {
    if (c == '1')
      ns.push_back(1);
    else
      ++ns.back();
  }
  return ns;
}

// Interior u = 0^k v with k >= 1 and v starting with 1 (or empty).
// Returns interiors (all starting with 1) whose sum equals I(0;u;1).
InteriorMap apply_r2(std::string_view u, const Rational& scale) {
  InteriorMap out;
  std::size_t k = 0;
  while (k < u.size() && u[k] == '0') ++k;
  if (k == u.size()) return out;  // I(0; 0^k; 1) regularises to 0
  std::vector<int> ns = run_lengths_after_ones(u.substr(k));
  const std::size_t r = ns.size();
  const Rational sign = k % 2 == 0 ? scale : Rational(-scale);

  std::vector<int> dist(r, 0);
  // Enumerate weak compositions i_1 + ... + i_r = k.
  auto emit = [&]() {
    mpz_class coeff = 1;
    std::string word;
    for (std::size_t j = 0; j < r; ++j) {
      coeff *= binomial(static_cast<unsigned>(ns[j] - 1 + dist[j]), static_cast<unsigned>(dist[j]));
      word.push_back('1');
      word.append(static_cast<std::size_t>(ns[j] + dist[j] - 1), '0');
    }
    accumulate(out, word, sign * Rational(coeff));
  };
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == r) {
      dist[j] = remaining;
      emit();
      return;
    }
    for (int i = 0; i <= remaining; ++i) {
      dist[j] = i;
      self(self, j + 1, remaining - i);
    }
  };
  rec(rec, 0, static_cast<int>(k));
  return out;
}

std::string dual_interior(std::string_view v) {
  std::string d(v.rbegin(), v.rend());
  for (char& c : d) c = c == '0' ? '1' : '0';
  return d;
}

void add_zeta(ZetaComb& out, std::string_view v, const Rational& c) {
  if (!v.empty() && (v.front() != '1' || v.back() != '0'))
    throw std::logic_error("regularisation produced a divergent interior " + std::string(v));
  ZetaComposition s{run_lengths_after_ones(v)};
  out.add(s, s.depth() % 2 == 0 ? c : Rational(-c));
}

}  // namespace

WordComb divergence_relation(const Word& w) {
  if (w.size() < 3 || w[0] != 0 || w[1] != 0)
    throw std::invalid_argument("divergence relation needs a word starting 00: " + w.str());
  if (w.back() != 1) throw std::invalid_argument("divergence relation needs upper bound 1: " + w.str());
  if (w.interior().find('1') == std::string_view::npos)
    throw std::invalid_argument("divergence relation needs at least one letter 1: " + w.str());
  WordComb out;
  for (const auto& [v, c] : apply_r2(w.interior(), 1)) out.add(Word::with_bounds(0, v, 1), c);
  return out;
}

ZetaComb regularise(const Word& w) {
  ZetaComb out;
  if (w.front() == w.back()) return out;
  if (w.size() == 2) {
    out.add(ZetaComposition{}, 1);
    return out;
  }
  // Step 1: orient the path from 0 to 1.
  std::string u(w.interior());
  Rational sign = 1;
  if (w.front() == 1) {
    u.assign(u.rbegin(), u.rend());
    if (u.size() % 2) sign = -1;
  }
  if (u.front() == '1' && u.back() == '0') {
    add_zeta(out, u, sign);
    return out;
  }
  // Step 2: leading zeros.
  InteriorMap step2;
  if (u.front() == '0')
    step2 = apply_r2(u, sign);
  else
    step2.emplace(u, sign);
  // Step 3: duality on every term.
  InteriorMap step3;
  for (const auto& [v, c] : step2) accumulate(step3, dual_interior(v), v.size() % 2 ? Rational(-c) : c);
  // Step 4: leading zeros created by duality.
  InteriorMap step4;
  for (const auto& [v, c] : step3) {
    if (v.front() == '0') {
      for (const auto& [x, cx] : apply_r2(v, c)) accumulate(step4, x, cx);
    } else {
      accumulate(step4, v, c);
    }
  }
  // Step 5.
  for (const auto& [v, c] : step4) add_zeta(out, v, c);
  return out;
}

ZetaComb regularise(const WordComb& c) {
  ZetaComb out;
  for (const auto& [term, coeff] : c) out.add(regularise(term.first), coeff, term.second);
  return out;
}

WordComb shuffle_words(std::string_view u, std::string_view v) {
  InteriorMap acc;
  std::string buf;
  buf.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      accumulate(acc, buf, 1);
      return;
    }
    if (i < u.size()) {
      buf.push_back(u[i]);
      self(self, i + 1, j);
      buf.pop_back();
    }
    if (j < v.size()) {
      buf.push_back(v[j]);
      self(self, i, j + 1);
      buf.pop_back();
    }
  };
  rec(rec, 0, 0);
  WordComb out;
  for (const auto& [x, c] : acc) out.add(Word::with_bounds(0, x, 1), c);
  return out;
}

ZetaComb stuffle_depth1(int n, const ZetaComposition& s) {
  if (n < 2) throw std::invalid_argument("stuffle_depth1 needs n >= 2");
  if (!s.is_convergent()) throw std::invalid_argument("stuffle_depth1 needs a convergent composition");
  ZetaComb out;
  for (std::size_t i = 0; i <= s.args.size(); ++i) {
    ZetaComposition t = s;
    t.args.insert(t.args.begin() + static_cast<std::ptrdiff_t>(i), n);
    out.add(t, 1);
  }
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    ZetaComposition t = s;
    t.args[i] += n;
    out.add(t, 1);
  }
  return out;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) * b[k];
    b[m] = -s / (m + 1);
  }
  return b[n];
}

PiRational zeta_even_coeff(int k) {
  if (k < 1) throw std::invalid_argument("zeta_even_coeff needs k >= 1");
  Rational q = bernoulli(2 * k) * Rational(mpz_class(1) << (2 * k - 1)) / Rational(factorial(2 * k));
  if (k % 2 == 0) q = -q;
  return {q, 2 * k};
}

PiRational zeta_twos_coeff(int m) {
  if (m < 0) throw std::invalid_argument("zeta_twos_coeff needs m >= 0");
  return {Rational(1) / Rational(factorial(static_cast<unsigned>(2 * m + 1))), 2 * m};
}

ZetaComposition twos(int m) { return ZetaComposition{std::vector<int>(static_cast<std::size_t>(m), 2)}; }

}  // namespace mzv
