#pragma once

#include <set>
#include <string>
#include <vector>

#include "mzv/blockcore.hpp"

namespace mzv {

// (B; s, t; alpha, beta) with 1-based block indices s <= t.
struct Subsequence {
  BlockDecomposition B;
  int s = 1;
  int t = 1;
  int alpha = 0;
  int beta = 0;

  static Subsequence parse(std::string_view text);

  bool operator==(const Subsequence&) const = default;
};

std::string to_string(const Subsequence& p);

BlockDecomposition refl_block(const BlockDecomposition& b, int j, int k);
std::set<BlockDecomposition> reflective_closure(const std::set<BlockDecomposition>& seeds);

bool is_valid(const Subsequence& p);
int letter_length(const Subsequence& p);
// 0-based offset of the first cut letter inside word_of(p.B).
int cut_offset(const Subsequence& p);
Word cut_word(const Subsequence& p);
Word quotient_word(const Subsequence& p);

std::vector<Subsequence> enumerate_subsequences(const BlockDecomposition& b, int letters);
Subsequence refl_subsequence(const Subsequence& p);

}  // namespace mzv
