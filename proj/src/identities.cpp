#include "mzv/identities.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text_cursor.hpp"

namespace mzv {

namespace {

const std::pair<Family, const char*> kFamilyNames[] = {
    {Family::Symmetric, "symmetric"},
    {Family::CyclicBasic, "cyclic-basic"},
    {Family::CyclicFull, "cyclic-full"},
    {Family::Bbbl, "bbbl"},
    {Family::Hoffman, "hoffman"},
    {Family::GeneralHoffman, "general-hoffman"},
    {Family::Cyc123, "cyc123"},
    {Family::AltoddEven, "altodd-even"},
    {Family::AltoddOdd, "altodd-odd"},
    {Family::BowmanBradley, "bowman-bradley"},
    {Family::Z1333Compsum, "z1333-compsum"},
    {Family::Z13312Sym, "z13312-sym"},
    {Family::Thm271, "thm-2-7-1"},
};

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int block_weight(const std::vector<int>& lengths) { return sum_of(lengths) - 2; }

void add_zeta(WordComb& out, const ZetaComposition& s, const Rational& c) {
  Signed<Word> w = mzv_to_word(s);
  out.add(w.value, w.sign > 0 ? c : Rational(-c));
}

// I_bl(lengths); trivial decompositions have equal bounds and vanish.
void add_block(WordComb& out, const std::vector<int>& lengths, const Rational& c, int pi_exp = 0) {
  Word w = block_word(lengths);
  if (w.front() == w.back()) return;
  out.add(w, c, pi_exp);
}

PiRational pi_over_factorial(const Rational& q, int wt) {
  return PiRational{q / Rational(factorial(static_cast<unsigned>(wt + 1))), wt};
}

Rhs pi_rhs(const Rational& q, int wt) { return Rhs{Rhs::Kind::PiMultiple, pi_over_factorial(q, wt)}; }

void require_blocks(const std::vector<int>& lengths, std::size_t min_blocks) {
  if (lengths.size() < min_blocks)
    throw std::invalid_argument("need at least " + std::to_string(min_blocks) + " block lengths");
  for (int l : lengths)
    if (l < 1) throw std::invalid_argument("block lengths must be positive");
}

void require_non_negative(const std::vector<int>& b) {
  for (int x : b)
    if (x < 0) throw std::invalid_argument("2-block exponents must be non-negative");
}

void require_non_trivial(const std::vector<int>& lengths) {
  if (is_trivial(BlockDecomposition{0, lengths}))
    throw std::invalid_argument("decomposition is trivial (weight and block count have equal parity)");
}

std::vector<int> rotate_left(std::vector<int> v, std::size_t k) {
  if (!v.empty()) std::rotate(v.begin(), v.begin() + static_cast<long>(k % v.size()), v.end());
  return v;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do f(p);
  while (std::next_permutation(p.begin(), p.end()));
}

bool has_repeat(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

Zeta123Form make_form(std::vector<Arg123> a, std::vector<int> b) {
  Zeta123Form z{std::move(a), std::move(b)};
  if (!z.is_valid()) throw std::invalid_argument("invalid 123 form " + to_string(z));
  return z;
}

// Sum_j cyc^j z with the accumulated signs.
WordComb cyc_orbit(const Zeta123Form& z, const Rational& c = 1) {
  WordComb out;
  Zeta123Form cur = z;
  int sign = 1;
  for (std::size_t j = 0; j < z.b.size(); ++j) {
    add_zeta(out, cur.expand(), sign > 0 ? c : Rational(-c));
    Signed<Zeta123Form> next = cyc(cur);
    cur = std::move(next.value);
    sign *= next.sign;
  }
  return out;
}

std::vector<Arg123> args_1333() { return {Arg123::One, Arg123::Three, Arg123::Three, Arg123::Three}; }
std::vector<Arg123> args_13312() { return {Arg123::One, Arg123::Three, Arg123::Three, Arg123::OneTwo}; }

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (name == n) return fam;
  throw std::invalid_argument("unknown family '" + name + "'");
}

WordComb Identity::difference() const {
  WordComb out = lhs;
  if (rhs.kind == Rhs::Kind::PiMultiple) out.add(Word("01"), -rhs.value.coeff, rhs.value.pi_exp);
  return out;
}

// ---------------------------------------------------------------------------
// 123 forms

bool Zeta123Form::is_valid() const {
  if (b.size() != a.size() + 1) return false;
  for (int x : b)
    if (x < 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Arg123::One && (i + 1 == a.size() || a[i + 1] != Arg123::Three)) return false;
    if (a[i] == Arg123::OneTwo && i + 1 < a.size() && a[i + 1] == Arg123::Three) return false;
  }
  return true;
}

ZetaComposition Zeta123Form::expand() const {
  ZetaComposition s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    s.args.insert(s.args.end(), static_cast<std::size_t>(b[i]), 2);
    if (i == a.size()) break;
    switch (a[i]) {
      case Arg123::One: s.args.push_back(1); break;
      case Arg123::Three: s.args.push_back(3); break;
      case Arg123::OneTwo:
        s.args.push_back(1);
        s.args.push_back(2);
        break;
    }
  }
  return s;
}

int Zeta123Form::weight() const { return expand().weight(); }
int Zeta123Form::depth() const { return expand().depth(); }

Zeta123Form Zeta123Form::from_composition(const ZetaComposition& s) {
  Zeta123Form z;
  z.b.push_back(0);
  const auto& v = s.args;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 2) {
      ++z.b.back();
    } else if (v[i] == 3) {
      z.a.push_back(Arg123::Three);
      z.b.push_back(0);
    } else if (v[i] == 1) {
      std::size_t j = i + 1;
      while (j < v.size() && v[j] == 2) ++j;
      if (j < v.size() && v[j] == 3) {
        z.a.push_back(Arg123::One);
      } else if (i + 1 < v.size() && v[i + 1] == 2) {
        z.a.push_back(Arg123::OneTwo);
        ++i;
      } else {
        throw std::invalid_argument(to_string(s) + " is not a 123-MZV");
      }
      z.b.push_back(0);
    } else {
      throw std::invalid_argument(to_string(s) + " is not a 123-MZV");
    }
  }
  if (!z.is_valid()) throw std::invalid_argument(to_string(s) + " is not a 123-MZV");
  return z;
}

Zeta123Form Zeta123Form::parse(std::string_view text) {
  detail::TextCursor in(text);
  in.accept('z');
  in.expect('(');
  Zeta123Form z;
  if (!in.peek('|')) {
    do {
      if (in.accept('(')) {
        if (in.integer() != 1) in.fail("expected (1,2)");
        in.expect(',');
        if (in.integer() != 2) in.fail("expected (1,2)");
        in.expect(')');
        z.a.push_back(Arg123::OneTwo);
      } else {
        const std::size_t at = in.position();
        int v = in.integer();
        if (v == 1)
          z.a.push_back(Arg123::One);
        else if (v == 3)
          z.a.push_back(Arg123::Three);
        else {
          in.seek(at);
          in.fail("argument must be 1, 3 or (1,2)");
        }
      }
    } while (in.accept(','));
  }
  in.expect('|');
  z.b = in.integer_list();
  in.expect(')');
  in.expect_end();
  if (!z.is_valid()) throw ParseError("invalid 123 form (check |b| = |a| + 1 and the 1/3 pairing)", 0);
  return z;
}

namespace {

std::string join_form(const Zeta123Form& z, const char* one_two, const char* bar) {
  std::string out;
  for (std::size_t i = 0; i < z.a.size(); ++i) {
    if (i) out += ",";
    switch (z.a[i]) {
      case Arg123::One: out += "1"; break;
      case Arg123::Three: out += "3"; break;
      case Arg123::OneTwo: out += one_two; break;
    }
  }
  out += bar;
  for (std::size_t i = 0; i < z.b.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(z.b[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Zeta123Form& z) { return "z(" + join_form(z, "(1,2)", "|") + ")"; }

std::string to_latex(const Zeta123Form& z) {
  return "\\zeta(" + join_form(z, "(1,2)", " \\mid ") + ")";
}

Signed<Zeta123Form> cyc(const Zeta123Form& z) {
  if (!z.is_valid()) throw std::invalid_argument("cyc needs a valid 123 form");
  const auto& a = z.a;
  const auto& b = z.b;

  if (!a.empty() && a[0] == Arg123::Three) {
    Zeta123Form out;
    out.a.assign(a.begin() + 1, a.end());
    out.a.push_back(Arg123::OneTwo);
    out.b.assign(b.begin() + 1, b.end());
    out.b.push_back(b[0]);
    return {std::move(out), -1};
  }

  std::size_t k = 0;
  while (k < a.size() && a[k] == Arg123::OneTwo) ++k;
  const int sign = k % 2 == 0 ? 1 : -1;

  if (k == a.size()) {
    Zeta123Form out;
    out.a.assign(k, Arg123::Three);
    out.b.assign(b.begin() + 1, b.end());
    out.b.push_back(b[0]);
    return {std::move(out), sign};
  }

  // a = (1,2)^k, 1, 3, rest;  b = l, m_1..m_k, n, rb
  Zeta123Form out;
  out.a.assign(a.begin() + static_cast<long>(k) + 2, a.end());
  out.a.push_back(Arg123::One);
  out.a.push_back(Arg123::Three);
  out.a.insert(out.a.end(), k, Arg123::Three);
  out.b.assign(b.begin() + static_cast<long>(k) + 2, b.end());
  out.b.insert(out.b.end(), b.begin(), b.begin() + static_cast<long>(k) + 2);
  return {std::move(out), sign};
}

int cyc123_sign_from_args(const Zeta123Form& z) {
  int ones = 0, threes = 0, one_twos = 0;
  for (Arg123 x : z.a) {
    if (x == Arg123::One) ++ones;
    if (x == Arg123::Three) ++threes;
    if (x == Arg123::OneTwo) ++one_twos;
  }
  const int e = threes - ones - one_twos;
  if (e % 2 != 0) return 0;
  return (e / 2) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Block-level families

Identity gen_symmetric(const BlockDecomposition& b) {
  if (b.eps1 != 0) throw std::invalid_argument("symmetric insertion needs eps1 = 0");
  require_blocks(b.lengths, 1);
  require_non_trivial(b.lengths);
  const int wt = weight(b);
  if (wt < 2 || wt % 2 != 0) throw std::invalid_argument("symmetric insertion needs even weight >= 2");

  Identity id;
  id.family = Family::Symmetric;
  id.params = {{"lengths", b.lengths}};
  id.weight = wt;
  id.rhs.kind = Rhs::Kind::UnknownZetaMultiple;
  for_each_permutation(b.lengths.size(), [&](const std::vector<std::size_t>& p) {
    std::vector<int> l;
    for (std::size_t i : p) l.push_back(b.lengths[i]);
    add_block(id.lhs, l, 1);
  });
  return id;
}

Identity gen_cyclic_basic(const std::vector<int>& lengths) {
  require_blocks(lengths, 2);
  require_non_trivial(lengths);
  const std::size_t n = lengths.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lengths[i] == 1 && lengths[(i + 1) % n] == 1)
      throw std::invalid_argument("cyclically adjacent lengths (1,1) at positions " + std::to_string(i + 1) +
                                  " and " + std::to_string((i + 1) % n + 1));

  Identity id;
  id.family = Family::CyclicBasic;
  id.params = {{"lengths", lengths}};
  id.weight = block_weight(lengths);
  for (std::size_t i = 0; i < n; ++i) add_block(id.lhs, rotate_left(lengths, i), 1);
  add_block(id.lhs, {id.weight + 2}, -1);
  return id;
}

std::vector<std::vector<int>> compute_Lk(const std::vector<int>& lengths, int k) {
  std::vector<std::vector<int>> out;
  const std::size_t n = lengths.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) return out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r = rotate_left(lengths, i);
    if (std::all_of(r.begin(), r.begin() + k, [](int x) { return x == 1; }))
      out.emplace_back(r.begin() + k, r.end());
  }
  return out;
}

Identity gen_cyclic_full(const std::vector<int>& lengths, CorrectionForm form) {
  require_blocks(lengths, 2);
  require_non_trivial(lengths);
  const std::size_t n = lengths.size();

  Identity id;
  id.family = Family::CyclicFull;
  id.params = {{"lengths", lengths}};
  if (form == CorrectionForm::Symbolic) id.params["symbolic"] = true;
  id.weight = block_weight(lengths);
  for (std::size_t i = 0; i < n; ++i) add_block(id.lhs, rotate_left(lengths, i), 1);
  add_block(id.lhs, {id.weight + 2}, -1);

  for (int k = 1; 2 * static_cast<std::size_t>(k) <= n; ++k) {
    for (const auto& m : compute_Lk(lengths, 2 * k)) {
      if (m.empty()) continue;
      if (form == CorrectionForm::Transcendental) {
        Rational c = Rational(mpz_class(1) << (2 * k)) * 2 / Rational(factorial(2 * k + 2));
        add_block(id.lhs, m, k % 2 == 0 ? c : Rational(-c), 2 * k);
      } else {
        Word w = block_word(m);
        if (w.front() == w.back()) continue;
        Rational c = Rational(mpz_class(1) << (2 * k + 1)) / (2 * k + 2);
        id.lhs.add(shuffle_words(block_word({2 * k + 2}).interior(), w.interior()), c);
      }
    }
  }
  return id;
}

// ---------------------------------------------------------------------------
// Families stated on the MZV side

Identity gen_bbbl(const std::vector<int>& b) {
  if (b.size() < 3 || b.size() % 2 == 0) throw std::invalid_argument("BBBL needs 2n+1 >= 3 exponents");
  require_non_negative(b);
  const std::size_t n = b.size() / 2;

  std::vector<Arg123> a;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(Arg123::One);
    a.push_back(Arg123::Three);
  }
  Identity id;
  id.family = Family::Bbbl;
  id.params = {{"b", b}};
  id.weight = static_cast<int>(4 * n) + 2 * sum_of(b);
  for (std::size_t i = 0; i < b.size(); ++i) add_zeta(id.lhs, make_form(a, rotate_left(b, i)).expand(), 1);
  id.rhs = pi_rhs(1, id.weight);
  return id;
}

Identity gen_cyc123(const Zeta123Form& z) {
  if (!z.is_valid()) throw std::invalid_argument("invalid 123 form " + to_string(z));
  Identity id;
  id.family = Family::Cyc123;
  id.params = {{"form", to_string(z)}};
  id.weight = z.weight();
  id.lhs = cyc_orbit(z);
  if (id.weight % 2 == 0) {
    const int e = id.weight / 2 - z.depth();
    id.rhs = pi_rhs(e % 2 == 0 ? 1 : -1, id.weight);
  }
  return id;
}

Identity gen_hoffman(int b1, int b2, int b3, bool symmetrised) {
  require_non_negative({b1, b2, b3});
  const std::vector<Arg123> a33 = {Arg123::Three, Arg123::Three};
  Identity id = gen_cyc123(make_form(a33, {b1, b2, b3}));
  id.family = Family::Hoffman;
  id.params = {{"b", {b1, b2, b3}}};
  if (symmetrised) {
    id.params["symmetrised"] = true;
    id.lhs += cyc_orbit(make_form(a33, {b2, b1, b3}));
    id.rhs.value.coeff *= 2;
  }
  return id;
}

Identity gen_general_hoffman(int n, const std::vector<int>& b, int c) {
  if (n < 1) throw std::invalid_argument("general Hoffman needs n >= 1");
  if (b.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("general Hoffman needs 2n = " + std::to_string(2 * n) + " values of b");
  require_non_negative(b);
  require_non_negative({c});

  Identity id;
  id.family = Family::GeneralHoffman;
  id.params = {{"n", n}, {"b", b}, {"c", c}};
  id.weight = 6 * n + 2 * sum_of(b) + 2 * c;
  for (int i = 1; i <= 2 * n + 1; ++i) {
    std::vector<Arg123> a(static_cast<std::size_t>(2 * n + 1 - i), Arg123::Three);
    a.insert(a.end(), static_cast<std::size_t>(i - 1), Arg123::OneTwo);
    std::vector<int> bb(b.begin() + (i - 1), b.end());
    bb.push_back(c);
    bb.insert(bb.end(), b.begin(), b.begin() + (i - 1));
    add_zeta(id.lhs, make_form(std::move(a), std::move(bb)).expand(), i % 2 == 0 ? 1 : -1);
  }
  id.rhs = pi_rhs(n % 2 == 0 ? -1 : 1, id.weight);
  return id;
}

CompositionSum composition_sum_from_name(const std::string& name) {
  if (name == "bowman-bradley") return CompositionSum::BowmanBradley;
  if (name == "z1333-compsum" || name == "z1333") return CompositionSum::Z1333;
  if (name == "further-13332n") return CompositionSum::Further13332n;
  throw std::invalid_argument("unknown composition sum '" + name + "'");
}

Identity gen_composition_sums(CompositionSum kind, int m, int n) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  Identity id;
  switch (kind) {
    case CompositionSum::BowmanBradley: {
      if (n < 1) throw std::invalid_argument("Bowman-Bradley needs n >= 1");
      std::vector<Arg123> a;
      for (int i = 0; i < n; ++i) {
        a.push_back(Arg123::One);
        a.push_back(Arg123::Three);
      }
      id.family = Family::BowmanBradley;
      id.params = {{"n", n}, {"m", m}};
      id.weight = 4 * n + 2 * m;
      for (const auto& b : weak_compositions(m, 2 * n + 1)) add_zeta(id.lhs, make_form(a, b).expand(), 1);
      Rational q = Rational(binomial(static_cast<unsigned>(m + 2 * n), static_cast<unsigned>(m))) / (2 * n + 1);
      id.rhs = pi_rhs(q, id.weight);
      return id;
    }
    case CompositionSum::Z1333: {
      id.family = Family::Z1333Compsum;
      id.params = {{"m", m}};
      id.weight = 10 + 2 * m;
      for (const auto& b : weak_compositions(m, 5)) id.lhs += cyc_orbit(make_form(args_1333(), b));
      id.rhs = pi_rhs(Rational(-binomial(static_cast<unsigned>(m + 4), static_cast<unsigned>(m))), id.weight);
      return id;
    }
    case CompositionSum::Further13332n: {
      if (m < 2) throw std::invalid_argument("further-13332n needs m >= 2");
      id.family = Family::Z1333Compsum;
      id.params = {{"m", m}, {"kind", "further-13332n"}};
      id.weight = 10 + 2 * m;
      std::vector<std::vector<int>> bs = {{0, 0, 0, 0, m}, {0, 0, 0, m, 0}};
      for (int i = 1; i <= m - 2; ++i) bs.push_back({0, 0, i, 0, m - i});
      bs.push_back({0, 1, 0, m - 1, 0});
      for (const auto& b : bs) id.lhs += cyc_orbit(make_form(args_1333(), b));
      id.rhs = pi_rhs(-(m + 1), id.weight);
      return id;
    }
  }
  throw std::logic_error("unhandled composition sum");
}

Identity gen_sym_family(SymFamily kind, const std::vector<int>& params) {
  Identity id;
  if (kind == SymFamily::Thm271) {
    if (params.size() != 1 || params[0] < 0) throw std::invalid_argument("thm-2-7-1 takes a single m >= 0");
    const int m = params[0];
    id.family = Family::Thm271;
    id.params = {{"m", m}};
    id.weight = 2 * m + 10;
    id.lhs = cyc_orbit(make_form(args_13312(), {m, 0, 0, 0, 0}));
    id.rhs = pi_rhs(1, id.weight);
    return id;
  }

  if (params.size() != 5) throw std::invalid_argument("z13312-sym takes five exponents b1..b5");
  require_non_negative(params);
  id.family = Family::Z13312Sym;
  id.params = {{"b", params}};
  id.weight = 10 + 2 * sum_of(params);
  const std::size_t group_a[] = {0, 1, 4};
  const std::size_t group_b[] = {2, 3};
  for_each_permutation(3, [&](const std::vector<std::size_t>& pa) {
    for_each_permutation(2, [&](const std::vector<std::size_t>& pb) {
      std::vector<int> b = params;
      for (std::size_t i = 0; i < 3; ++i) b[group_a[i]] = params[group_a[pa[i]]];
      for (std::size_t i = 0; i < 2; ++i) b[group_b[i]] = params[group_b[pb[i]]];
      id.lhs += cyc_orbit(make_form(args_1333(), b));
      id.lhs -= cyc_orbit(make_form(args_13312(), {b[0], b[1], b[2], b[4], b[3]}));
    });
  });
  id.rhs = pi_rhs(-24, id.weight);
  return id;
}

// ---------------------------------------------------------------------------
// Alternating sums

namespace {

// Antisymmetrise build(values) over the permutations of values.
template <class Build>
WordComb alt_over(const std::vector<int>& values, Build&& build) {
  WordComb out;
  for_each_permutation(values.size(), [&](const std::vector<std::size_t>& p) {
    std::vector<int> v;
    for (std::size_t i : p) v.push_back(values[i]);
    out.add(build(v), permutation_sign(p));
  });
  return out;
}

}  // namespace

Identity gen_altodd_even(const std::vector<int>& lengths) {
  require_blocks(lengths, 3);
  require_non_trivial(lengths);
  if (block_weight(lengths) % 2 != 0) throw std::invalid_argument("alt-odd (even) needs even weight");

  Identity id;
  id.family = Family::AltoddEven;
  id.params = {{"lengths", lengths}};
  id.weight = block_weight(lengths);
  std::vector<int> odd;
  for (std::size_t i = 0; i < lengths.size(); i += 2) odd.push_back(lengths[i]);
  if (has_repeat(odd)) return id;
  id.lhs = alt_over(odd, [&](const std::vector<int>& o) {
    std::vector<int> l = lengths;
    for (std::size_t i = 0; i < o.size(); ++i) l[2 * i] = o[i];
    WordComb t;
    add_block(t, l, 1);
    return t;
  });
  return id;
}

Identity gen_altodd_odd(const std::vector<int>& lengths, int x, bool double_alt) {
  Identity id;
  id.family = Family::AltoddOdd;

  if (double_alt) {
    require_blocks(lengths, 4);
    if (lengths.size() != 4 && lengths.size() != 6)
      throw std::invalid_argument("double alternation takes 4 or 6 lengths");
    require_non_trivial(lengths);
    id.params = {{"lengths", lengths}, {"double_alt", true}};
    id.weight = block_weight(lengths);
    const bool four = lengths.size() == 4;
    const std::vector<std::size_t> ga = four ? std::vector<std::size_t>{0, 2} : std::vector<std::size_t>{0, 3, 5};
    const std::vector<std::size_t> gb = four ? std::vector<std::size_t>{1, 3} : std::vector<std::size_t>{1, 2, 4};
    std::vector<int> va, vb;
    for (std::size_t i : ga) va.push_back(lengths[i]);
    for (std::size_t i : gb) vb.push_back(lengths[i]);
    if (has_repeat(va) || has_repeat(vb)) return id;
    id.lhs = alt_over(va, [&](const std::vector<int>& pa) {
      return alt_over(vb, [&](const std::vector<int>& pb) {
        std::vector<int> l = lengths;
        for (std::size_t i = 0; i < ga.size(); ++i) l[ga[i]] = pa[i];
        for (std::size_t i = 0; i < gb.size(); ++i) l[gb[i]] = pb[i];
        WordComb t;
        add_block(t, l, 1);
        return t;
      });
    });
    return id;
  }

  if (lengths.empty() || lengths.size() % 2 != 0)
    throw std::invalid_argument("alt-odd candidate takes an even number 2n >= 2 of lengths");
  require_blocks(lengths, 2);
  const std::size_t n = lengths.size() / 2;
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < lengths.size(); ++i) (i % 2 == 0 ? odd : even).push_back(lengths[i]);

  if ((x + sum_of(odd)) % 2 == 0)
    throw std::invalid_argument("constraint violated: x + (l_1 + l_3 + ... + l_{2n-1}) must be odd");
  const int even_sum = sum_of(even);
  for (std::size_t i = 0; i < n; ++i)
    if (x - (even_sum - even[i]) <= 0)
      throw std::invalid_argument("constraint violated: x - sum(E_" + std::to_string(i + 1) + ") = " +
                                  std::to_string(x - (even_sum - even[i])) + " must be > 0");

  id.params = {{"lengths", lengths}, {"x", x}};
  id.weight = x + sum_of(odd) - 2;
  if (has_repeat(odd)) return id;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> ei = even;
    ei.erase(ei.begin() + static_cast<long>(i));
    const int xp = x - sum_of(ei);
    WordComb row = alt_over(odd, [&](const std::vector<int>& o) {
      std::vector<int> interleaved;
      for (std::size_t j = 0; j < n; ++j) {
        interleaved.push_back(o[j]);
        if (j + 1 < n) interleaved.push_back(ei[j]);
      }
      const auto pos = static_cast<long>(2 * i);
      std::vector<int> bl = interleaved, cl = interleaved;
      bl.insert(bl.begin() + pos, xp);
      cl.insert(cl.begin() + pos + 1, xp);
      WordComb t;
      add_block(t, bl, 1);
      add_block(t, cl, 1);
      return t;
    });
    id.lhs.add(row, (i + 1) % 2 == 0 ? 1 : -1);
  }
  return id;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> weak_compositions(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || m < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<std::vector<int>> compositions(int total, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || total < k) return out;
  for (auto w : weak_compositions(total - k, k)) {
    for (int& v : w) ++v;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<int>> cyclic_representatives(int total, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& c : compositions(total, k)) {
    bool least = true;
    for (std::size_t i = 1; i < c.size() && least; ++i)
      if (rotate_left(c, i) < c) least = false;
    if (least) out.push_back(c);
  }
  return out;
}

}  // namespace mzv
