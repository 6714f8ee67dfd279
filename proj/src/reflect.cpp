#include "mzv/reflect.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "text_cursor.hpp"

namespace mzv {

namespace {

std::vector<int> block_offsets(const BlockDecomposition& b) {
  std::vector<int> off(b.block_count() + 1, 0);
  for (std::size_t i = 0; i < b.block_count(); ++i) off[i + 1] = off[i] + b.lengths[i];
  return off;
}

}  // namespace

Subsequence Subsequence::parse(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('(');
  std::size_t open = cur.position();
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos) throw ParseError("unterminated block decomposition at position " + std::to_string(open), open);
  Subsequence p;
  try {
    p.B = BlockDecomposition::parse(text.substr(open, close - open + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), open + e.position());
  }
  cur.seek(close + 1);
  cur.expect(';');
  p.s = cur.integer();
  cur.expect(',');
  p.t = cur.integer();
  cur.expect(';');
  p.alpha = cur.integer();
  cur.expect(',');
  p.beta = cur.integer();
  cur.expect(')');
  cur.expect_end();
  if (!is_valid(p)) cur.fail("subsequence violates the validity conditions");
  return p;
}

std::string to_string(const Subsequence& p) {
  return "(" + to_string(p.B) + "; " + std::to_string(p.s) + "," + std::to_string(p.t) + "; " +
         std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")";
}

BlockDecomposition refl_block(const BlockDecomposition& b, int j, int k) {
  const int n = static_cast<int>(b.block_count());
  if (j < 1 || k > n || j > k)
    throw std::out_of_range("refl indices " + std::to_string(j) + "," + std::to_string(k) + " out of range for " +
                            std::to_string(n) + " blocks");
  BlockDecomposition r = b;
  std::reverse(r.lengths.begin() + (j - 1), r.lengths.begin() + k);
  return r;
}

std::set<BlockDecomposition> reflective_closure(const std::set<BlockDecomposition>& seeds) {
  std::set<BlockDecomposition> seen;
  if (seeds.empty()) return seen;
  const BlockDecomposition& first = *seeds.begin();
  for (const auto& b : seeds) {
    if (weight(b) != weight(first) || b.block_count() != first.block_count() || b.eps1 != first.eps1)
      throw std::invalid_argument("reflective closure needs a common weight, block count and start letter");
  }
  std::deque<BlockDecomposition> frontier(seeds.begin(), seeds.end());
  seen = seeds;
  const int n = static_cast<int>(first.block_count());
  while (!frontier.empty()) {
    BlockDecomposition b = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i < n; ++i) {
      BlockDecomposition r = refl_block(b, i, i + 1);
      if (seen.insert(r).second) frontier.push_back(std::move(r));
    }
  }
  return seen;
}

bool is_valid(const Subsequence& p) {
  const int n = static_cast<int>(p.B.block_count());
  if (p.s < 1 || p.s > p.t || p.t > n) return false;
  const int ls = p.B.lengths[p.s - 1];
  const int lt = p.B.lengths[p.t - 1];
  if (p.alpha < 0 || p.alpha >= ls || p.beta < 0 || p.beta >= lt) return false;
  if (p.s == p.t && p.alpha + p.beta + 2 > ls) return false;
  return letter_length(p) >= 2;
}

int letter_length(const Subsequence& p) {
  int total = 0;
  for (int i = p.s; i <= p.t; ++i) total += p.B.lengths[i - 1];
  return total - p.alpha - p.beta;
}

int cut_offset(const Subsequence& p) { return block_offsets(p.B)[p.s - 1] + p.alpha; }

Word cut_word(const Subsequence& p) {
  const std::string bits = word_of(p.B).str();
  return Word(bits.substr(cut_offset(p), letter_length(p)));
}

Word quotient_word(const Subsequence& p) {
  const std::string bits = word_of(p.B).str();
  const int start = cut_offset(p);
  const int end = start + letter_length(p) - 1;
  return Word(bits.substr(0, start + 1) + bits.substr(end));
}

std::vector<Subsequence> enumerate_subsequences(const BlockDecomposition& b, int letters) {
  if (letters < 5 || letters % 2 == 0) throw std::invalid_argument("cut letter-length must be odd and at least 5");
  std::vector<Subsequence> out;
  const std::vector<int> off = block_offsets(b);
  const int total = off.back();
  for (int p = 0; p + letters <= total; ++p) {
    const int last = p + letters - 1;
    // Blocks are half-open ranges [off[i], off[i+1]).
    int s = static_cast<int>(std::upper_bound(off.begin(), off.end(), p) - off.begin());
    int t = static_cast<int>(std::upper_bound(off.begin(), off.end(), last) - off.begin());
    Subsequence sub{b, s, t, p - off[s - 1], off[t] - last - 1};
    out.push_back(std::move(sub));
  }
  return out;
}

Subsequence refl_subsequence(const Subsequence& p) {
  return {refl_block(p.B, p.s, p.t), p.s, p.t, p.beta, p.alpha};
}

}  // namespace mzv
