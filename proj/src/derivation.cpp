#include "mzv/derivation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mzv/reflect.hpp"

namespace mzv {

Signed<Word> canonical_left(const Word& w) {
  const int rev_sign = w.size() % 2 == 0 ? 1 : -1;
  const Signed<Word> candidates[] = {
      {w, 1}, {reversed(w), rev_sign}, {flipped(w), 1}, {reversed(flipped(w)), rev_sign}};
  Signed<Word> best = candidates[0];
  for (const auto& c : candidates)
    if (c.value < best.value) best = c;
  for (const auto& c : candidates)
    if (c.value == best.value && c.sign != best.sign) return {best.value, 0};
  return best;
}

TensorComb d_r(const WordComb& c, int r) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("D_r needs odd r >= 3");
  TensorComb out;
  for (const auto& [term, coeff] : c) {
    const std::string& bits = term.first.str();
    const int n = term.first.weight();
    for (int p = 0; p + r <= n; ++p) {
      if (bits[p] == bits[p + r + 1]) continue;
      Signed<Word> left = canonical_left(Word(bits.substr(p, r + 2)));
      if (left.sign == 0) continue;
      Word right(bits.substr(0, p + 1) + bits.substr(p + r + 1));
      out.add(TensorTerm{std::move(left.value), std::move(right), r}, left.sign > 0 ? coeff : Rational(-coeff),
              term.second);
    }
  }
  return out;
}

namespace {

int common_weight(const WordComb& c) {
  int w = -1;
  for (const auto& [term, coeff] : c) {
    if (w < 0) w = term.first.weight();
    if (term.first.weight() != w) throw std::invalid_argument("combination is not weight-homogeneous");
  }
  return std::max(w, 0);
}

}  // namespace

TensorComb d_less_than_N(const WordComb& c) {
  const int n = common_weight(c);
  TensorComb out;
  for (int r = 3; r < n; r += 2) out.add(d_r(c, r));
  return out;
}

KernelReport kernel_report(const WordComb& c) {
  KernelReport rep;
  rep.weight = common_weight(c);
  rep.residue = d_less_than_N(c);
  rep.vanishes = rep.residue.empty();
  if (rep.vanishes)
    rep.conclusion = "D_<N vanishes; the combination is a rational multiple of zeta(" + std::to_string(rep.weight) + ")";
  else
    rep.conclusion = "residue of " + std::to_string(rep.residue.size()) +
                     " tensor terms remains after canonicalisation (not a disproof)";
  return rep;
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> rot = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    best = std::min(best, rot);
  }
  return best;
}

std::vector<std::vector<int>> distinct_rotations(const std::vector<int>& v) {
  std::vector<std::vector<int>> out;
  std::vector<int> rot = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::find(out.begin(), out.end(), rot) == out.end()) out.push_back(rot);
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return out;
}

struct ClassAccumulator {
  std::map<std::vector<int>, Rational> members;
  std::vector<bool> flags;  // original-length flags, aligned with the representative
};

CyclicClass classify(const std::vector<int>& rep, const std::map<std::vector<int>, Rational>& members) {
  CyclicClass cls{rep, 0, false};
  auto rotations = distinct_rotations(rep);
  cls.coeff = members.begin()->second;
  cls.full = members.size() == rotations.size();
  for (const auto& [m, c] : members)
    if (c != cls.coeff) cls.full = false;
  return cls;
}

}  // namespace

StabilityReport stability_shape(const std::vector<int>& lengths, int r) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("stability needs odd r >= 3");
  StabilityReport rep;
  rep.r = r;
  rep.lengths = lengths;
  const std::size_t n = lengths.size();
  if (n <= 1) return rep;

  // left word -> class representative -> accumulator
  std::map<Word, std::map<std::vector<int>, ClassAccumulator>> groups;
  std::vector<int> rot = lengths;
  for (std::size_t shift = 0; shift < n; ++shift) {
    BlockDecomposition b{0, rot};
    if (r + 2 <= static_cast<int>(word_of(b).size())) {
      for (const Subsequence& p : enumerate_subsequences(b, r + 2)) {
        Word cut = cut_word(p);
        if (is_trivial(cut)) continue;
        Signed<Word> left = canonical_left(cut);
        if (left.sign == 0) continue;
        BlockDecomposition q = block_decompose(quotient_word(p));
        std::vector<bool> flags(q.block_count(), true);
        flags[static_cast<std::size_t>(p.s - 1)] = false;
        std::vector<int> key = least_rotation(q.lengths);
        auto& acc = groups[left.value][key];
        acc.members[q.lengths] += left.sign;
        if (acc.flags.empty()) {
          // Rotate flags so they line up with the representative.
          std::vector<int> probe = q.lengths;
          std::vector<bool> f = flags;
          for (std::size_t i = 0; i < probe.size() && probe != key; ++i) {
            std::rotate(probe.begin(), probe.begin() + 1, probe.end());
            std::rotate(f.begin(), f.begin() + 1, f.end());
          }
          acc.flags = f;
        }
      }
    }
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }

  for (auto& [left, classes] : groups) {
    StabilityGroup g;
    g.left = left;
    g.left_lengths = block_decompose(left).lengths;
    for (auto& [key, acc] : classes) {
      std::erase_if(acc.members, [](const auto& kv) { return sgn(kv.second) == 0; });
      if (acc.members.empty()) continue;
      CyclicClass cls = classify(key, acc.members);
      if (!cls.full) rep.all_cyclic = false;
      if (g.left_lengths.size() + key.size() != n + 1) g.block_count_law = false;
      g.classes.push_back(std::move(cls));
      g.original_lengths.push_back(acc.flags);
    }
    if (!g.block_count_law) rep.all_cyclic = false;
    if (!g.classes.empty()) rep.groups.push_back(std::move(g));
  }
  return rep;
}

TensorComb collapse_cyclic(const TensorComb& c) {
  struct Key {
    int grade;
    Word left;
    int pi_exp;
    std::vector<int> rep;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::map<std::vector<int>, Rational>> classes;
  TensorComb out;
  for (const auto& [term, coeff] : c) {
    const TensorTerm& t = term.first;
    BlockDecomposition b = block_decompose(t.right);
    if (b.eps1 != 0) {
      out.add(t, coeff, term.second);
      continue;
    }
    classes[Key{t.grade, t.left, term.second, least_rotation(b.lengths)}][b.lengths] += coeff;
  }
  for (auto& [key, members] : classes) {
    std::erase_if(members, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (members.empty()) continue;
    CyclicClass cls = classify(key.rep, members);
    if (cls.full) {
      const int m = weight(BlockDecomposition{0, key.rep});
      if (m % 2 != 0) continue;
      const Rational share = Rational(static_cast<long>(distinct_rotations(key.rep).size())) /
                             Rational(static_cast<long>(key.rep.size()));
      out.add(TensorTerm{key.left, block_word({m + 2}), key.grade}, cls.coeff * share, key.pi_exp);
    } else {
      for (const auto& [lengths, coeff] : members)
        out.add(TensorTerm{key.left, block_word(lengths), key.grade}, coeff, key.pi_exp);
    }
  }
  return out;
}

}  // namespace mzv
