#include "mzv/rank.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mzv/verify.hpp"

namespace mzv {

mpz_class zagier_dim(int n) {
  if (n < 0) return 0;
  std::vector<mpz_class> d = {1, 0, 1};
  for (int k = 3; k <= n; ++k) d.push_back(d[k - 2] + d[k - 3]);
  return d[static_cast<std::size_t>(n)];
}

std::vector<ZetaComposition> basis(int n) {
  std::vector<ZetaComposition> out;
  if (n < 2) return out;
  const int free = n - 2;
  // Words 0 1 x_1..x_{n-2} 0 1: the binary order of the word is the order of x.
  for (unsigned long x = 0; x < (1UL << free); ++x) {
    std::string bits = "01";
    for (int i = free - 1; i >= 0; --i) bits.push_back((x >> i) & 1 ? '1' : '0');
    bits += "01";
    out.push_back(word_to_mzv(Word(bits)).value);
  }
  return out;
}

ZetaComb vectorize(const WordComb& difference, int n) {
  ZetaComb out;
  for (const auto& [term, coeff] : difference) {
    const int e = term.second;
    if (e % 2 != 0) throw std::invalid_argument("odd power of pi cannot be vectorised");
    const ZetaComb reg = regularise(term.first);
    if (e == 0) {
      out.add(reg, coeff);
      continue;
    }
    const Rational q = zeta_even_coeff(e / 2).coeff;
    for (const auto& [s, c] : reg) {
      const Rational k = coeff * c;
      if (s.first.args.empty())
        out.add(twos(e / 2), k * Rational(factorial(static_cast<unsigned>(e + 1))));
      else
        out.add(stuffle_depth1(e, s.first), k / q);
    }
  }
  for (const auto& [s, c] : out)
    if (s.first.weight() != n || s.second != 0)
      throw std::invalid_argument("relation is not homogeneous of weight " + std::to_string(n));
  return out;
}

ZetaComb vectorize(const Identity& id) {
  if (id.rhs.kind == Rhs::Kind::UnknownZetaMultiple)
    throw std::invalid_argument("identity with an unknown rational right-hand side cannot be vectorised");
  return vectorize(id.difference(), id.weight);
}

std::vector<Rational> to_dense(const ZetaComb& row, const std::vector<ZetaComposition>& b) {
  std::map<ZetaComposition, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index.emplace(b[i], i);
  std::vector<Rational> out(b.size());
  for (const auto& [s, c] : row) {
    auto it = index.find(s.first);
    if (it == index.end()) throw std::invalid_argument(to_string(s.first) + " is not a basis element");
    out[it->second] = c;
  }
  return out;
}

std::string rank_family_name(RankFamily f) {
  switch (f) {
    case RankFamily::Cyclic: return "cyclic";
    case RankFamily::Altodd: return "altodd";
    case RankFamily::Duality: return "duality";
  }
  return "?";
}

RankFamily rank_family_from_name(const std::string& name) {
  if (name == "cyclic") return RankFamily::Cyclic;
  if (name == "altodd") return RankFamily::Altodd;
  if (name == "duality") return RankFamily::Duality;
  throw std::invalid_argument("unknown rank family '" + name + "' (expected cyclic, altodd or duality)");
}

namespace {

std::vector<ZetaComb> cyclic_rows(int n) {
  std::vector<ZetaComb> rows;
  for (int parts = 3; parts <= n + 2; ++parts) {
    if ((n - parts) % 2 == 0) continue;
    for (const auto& l : cyclic_representatives(n + 2, parts)) rows.push_back(vectorize(gen_cyclic_full(l)));
  }
  return rows;
}

std::vector<ZetaComb> duality_rows(int n) {
  std::vector<ZetaComb> rows;
  for (const ZetaComposition& s : basis(n)) {
    Signed<Word> w = mzv_to_word(s);
    ZetaComposition d = word_to_mzv(dual(w.value).value).value;
    if (d == s) continue;
    ZetaComb row(s);
    row.add(d, -1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ZetaComb> altodd_rows(int n) {
  std::vector<ZetaComb> rows;
  auto push = [&](const Identity& id) {
    ZetaComb v = vectorize(id);
    if (!v.empty()) rows.push_back(std::move(v));
  };
  if (n % 2 == 0) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (int parts = 3; parts <= n + 2; parts += 2) {
      for (const auto& l : compositions(n + 2, parts)) {
        std::vector<int> odd, even;
        for (std::size_t i = 0; i < l.size(); ++i) (i % 2 == 0 ? odd : even).push_back(l[i]);
        std::sort(odd.begin(), odd.end());
        if (std::adjacent_find(odd.begin(), odd.end()) != odd.end()) continue;
        if (!seen.insert({odd, even}).second) continue;
        push(gen_altodd_even(l));
      }
    }
  } else {
    for (int m = 1; m <= n; ++m) {
      for (int parts = 2; parts <= m; parts += 2) {
        for (const auto& l : compositions(m, parts)) {
          int odd_sum = 0, even_sum = 0;
          for (std::size_t i = 0; i < l.size(); ++i) (i % 2 == 0 ? odd_sum : even_sum) += l[i];
          const int x = n + 2 - odd_sum;
          bool ok = true;
          for (std::size_t i = 1; i < l.size(); i += 2)
            if (x - (even_sum - l[i]) <= 0) ok = false;
          if (ok) push(gen_altodd_odd(l, x));
        }
      }
    }
  }
  return rows;
}

bool numerically_zero(const ZetaComb& row, int digits) {
  const BigReal r = MzvEvaluator::shared().eval(row, digits + 15);
  return classify_residual(r, digits) == VerifyStatus::Verified;
}

}  // namespace

std::vector<ZetaComb> family_rows(int n, RankFamily family) {
  if (n < 2) throw std::invalid_argument("rank rows need weight >= 2");
  switch (family) {
    case RankFamily::Cyclic: return cyclic_rows(n);
    case RankFamily::Altodd: return altodd_rows(n);
    case RankFamily::Duality: return duality_rows(n);
  }
  return {};
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("rows have different lengths");
    mpz_class den = 1;
    for (const Rational& q : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const Rational& q : r) z.push_back(q.get_num() * (den / q.get_den()));
    m.push_back(std::move(z));
  }

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const mpz_class& p = m[rank][col];
    std::vector<std::size_t> support;
    for (std::size_t j = col + 1; j < cols; ++j)
      if (m[rank][j] != 0) support.push_back(j);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const mpz_class f = m[i][col];
      if (f == 0) {
        if (p == prev) continue;
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          m[i][j] *= p;
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        m[i][j] *= p;
      }
      for (std::size_t j : support) m[i][j] -= f * m[rank][j];
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_of(const std::vector<ZetaComb>& rows, int n) {
  const std::vector<ZetaComposition> b = basis(n);
  std::vector<std::vector<Rational>> dense;
  for (const auto& r : rows) dense.push_back(to_dense(r, b));
  return rank_of(dense);
}

TableRow table_row(int n, const TableOptions& opts) {
  TableRow row;
  row.weight = n;
  row.expected = (mpz_class(1) << (n - 2)) - zagier_dim(n);
  std::vector<ZetaComb> all;
  for (RankFamily f : opts.families) {
    std::vector<ZetaComb> rows = family_rows(n, f);
    FamilyCount count;
    count.init = rows.size();
    if (opts.check_digits > 0) {
      const auto bad = std::stable_partition(rows.begin(), rows.end(),
                                             [&](const ZetaComb& r) { return numerically_zero(r, opts.check_digits); });
      count.numeric_failures = static_cast<std::size_t>(rows.end() - bad);
      rows.erase(bad, rows.end());
    }
    count.rank = rank_of(rows, n);
    all.insert(all.end(), rows.begin(), rows.end());
    row.families.emplace_back(f, count);
  }
  row.overall = rank_of(all, n);
  return row;
}

}  // namespace mzv
