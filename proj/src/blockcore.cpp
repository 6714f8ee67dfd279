#include "mzv/blockcore.hpp"

#include <algorithm>
#include <numeric>

#include "text_cursor.hpp"

namespace mzv {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

Word::Word(std::string bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) throw std::invalid_argument("word needs at least two letters");
  for (char c : bits_)
    if (c != '0' && c != '1') throw std::invalid_argument("word letters must be 0 or 1");
}

Word Word::parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty word at position 0", 0);
  std::string_view core = text.substr(first, last - first + 1);
  for (std::size_t i = 0; i < core.size(); ++i)
    if (core[i] != '0' && core[i] != '1')
      throw ParseError("invalid letter '" + std::string(1, core[i]) + "' at position " +
                           std::to_string(first + i),
                       first + i);
  if (core.size() < 2)
    throw ParseError("word needs at least two letters at position " + std::to_string(first + core.size()),
                     first + core.size());
  return Word(std::string(core));
}

Word Word::with_bounds(int lower, std::string_view interior, int upper) {
  std::string bits;
  bits.reserve(interior.size() + 2);
  bits.push_back(static_cast<char>('0' + lower));
  bits.append(interior);
  bits.push_back(static_cast<char>('0' + upper));
  return Word(std::move(bits));
}

Word reversed(const Word& w) {
  std::string s = w.str();
  std::reverse(s.begin(), s.end());
  return Word(std::move(s));
}

Word flipped(const Word& w) {
  std::string s = w.str();
  for (char& c : s) c = c == '0' ? '1' : '0';
  return Word(std::move(s));
}

Signed<Word> dual(const Word& w) {
  return {reversed(flipped(w)), w.weight() % 2 == 0 ? 1 : -1};
}

bool is_trivial(const Word& w) { return w.front() == w.back(); }

bool is_divergent(const Word& w) {
  if (w.size() < 3) return false;
  return w[0] == w[1] || w[w.size() - 2] == w[w.size() - 1];
}

bool is_convergent_form(const Word& w) {
  if (w.front() != 0 || w.back() != 1) return false;
  if (w.size() == 2) return true;
  return w[1] == 1 && w[w.size() - 2] == 0;
}

int BlockDecomposition::start_letter(std::size_t i) const {
  int e = eps1;
  for (std::size_t j = 0; j < i; ++j) e += lengths.at(j) - 1;
  return e % 2;
}

int BlockDecomposition::end_letter(std::size_t i) const {
  return (start_letter(i) + lengths.at(i) - 1) % 2;
}

BlockDecomposition BlockDecomposition::parse(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('(');
  int e = cur.integer();
  if (e > 1) cur.fail("starting letter must be 0 or 1");
  cur.expect(';');
  BlockDecomposition b{e, {}};
  do {
    std::size_t at = cur.position();
    int l = cur.integer();
    if (l < 1) throw ParseError("block length must be positive at position " + std::to_string(at), at);
    b.lengths.push_back(l);
  } while (cur.accept(','));
  cur.expect(')');
  cur.expect_end();
  return b;
}

std::string to_string(const BlockDecomposition& b) {
  std::string out = "(" + std::to_string(b.eps1) + "; ";
  for (std::size_t i = 0; i < b.lengths.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b.lengths[i]);
  }
  return out + ")";
}

BlockDecomposition block_decompose(const Word& w) {
  BlockDecomposition b{w[0], {1}};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1])
      b.lengths.push_back(1);
    else
      ++b.lengths.back();
  }
  return b;
}

Word word_of(const BlockDecomposition& b) {
  if (b.lengths.empty()) throw std::invalid_argument("block decomposition has no blocks");
  std::string bits;
  int eps = b.eps1;
  for (int l : b.lengths) {
    if (l < 1) throw std::invalid_argument("block length must be positive");
    for (int j = 0; j < l; ++j) bits.push_back(static_cast<char>('0' + (eps + j) % 2));
    eps = (eps + l - 1) % 2;
  }
  if (bits.size() < 2) throw std::invalid_argument("block decomposition describes fewer than two letters");
  return Word(std::move(bits));
}

Word block_word(const std::vector<int>& lengths) { return word_of({0, lengths}); }

int weight(const BlockDecomposition& b) {
  return std::accumulate(b.lengths.begin(), b.lengths.end(), 0) - 2;
}

bool is_trivial(const BlockDecomposition& b) {
  int n = static_cast<int>(b.block_count());
  return ((weight(b) - n) % 2 + 2) % 2 == 0;
}

bool is_divergent(const BlockDecomposition& b) {
  if (weight(b) > 2 && !is_trivial(b)) return b.lengths.front() == 1 || b.lengths.back() == 1;
  return is_divergent(word_of(b));
}

Signed<BlockDecomposition> dual(const BlockDecomposition& b) {
  BlockDecomposition d = b;
  std::reverse(d.lengths.begin(), d.lengths.end());
  return {d, weight(b) % 2 == 0 ? 1 : -1};
}

int ZetaComposition::weight() const { return std::accumulate(args.begin(), args.end(), 0); }

ZetaComposition ZetaComposition::parse(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('z');
  cur.expect('(');
  ZetaComposition s;
  if (!cur.peek(')')) {
    do {
      std::size_t at = cur.position();
      int a = cur.integer();
      if (a < 1) throw ParseError("zeta argument must be positive at position " + std::to_string(at), at);
      s.args.push_back(a);
    } while (cur.accept(','));
  }
  cur.expect(')');
  cur.expect_end();
  return s;
}

std::string to_string(const ZetaComposition& s) {
  std::string out = "z(";
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.args[i]);
  }
  return out + ")";
}

Signed<Word> mzv_to_word(const ZetaComposition& s) {
  if (!s.is_convergent()) throw std::invalid_argument("composition " + to_string(s) + " is not convergent");
  std::string bits = "0";
  for (int a : s.args) {
    if (a < 1) throw std::invalid_argument("zeta arguments must be positive");
    bits.push_back('1');
    bits.append(static_cast<std::size_t>(a - 1), '0');
  }
  bits.push_back('1');
  return {Word(std::move(bits)), s.depth() % 2 == 0 ? 1 : -1};
}

Signed<ZetaComposition> word_to_mzv(const Word& w) {
  if (!is_convergent_form(w))
    throw std::invalid_argument("word " + w.str() + " is not a convergent I(0;1...0;1) word");
  ZetaComposition s;
  for (char c : w.interior()) {
    if (c == '1')
      s.args.push_back(1);
    else
      ++s.args.back();
  }
  return {s, s.depth() % 2 == 0 ? 1 : -1};
}

}  // namespace mzv
