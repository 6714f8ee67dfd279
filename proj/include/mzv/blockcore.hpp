#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

template <class T>
struct Signed {
  T value;
  int sign = 1;
};

// A binary word a0 a1 ... aN a(N+1), integration bounds included.
class Word {
 public:
  Word() : bits_("01") {}
  explicit Word(std::string bits);

  static Word parse(std::string_view text);
  static Word with_bounds(int lower, std::string_view interior, int upper);

  std::size_t size() const noexcept { return bits_.size(); }
  int weight() const noexcept { return static_cast<int>(bits_.size()) - 2; }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }
  int front() const { return bits_.front() - '0'; }
  int back() const { return bits_.back() - '0'; }
  std::string_view interior() const {
    return std::string_view(bits_).substr(1, bits_.size() - 2);
  }
  const std::string& str() const noexcept { return bits_; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string bits_;
};

Word reversed(const Word& w);
Word flipped(const Word& w);
Signed<Word> dual(const Word& w);
bool is_trivial(const Word& w);
bool is_divergent(const Word& w);
bool is_convergent_form(const Word& w);

struct BlockDecomposition {
  int eps1 = 0;
  std::vector<int> lengths;

  std::size_t block_count() const noexcept { return lengths.size(); }
  // 0-based accessors for B_i^len, B_i^st, B_i^en.
  int len(std::size_t i) const { return lengths.at(i); }
  int start_letter(std::size_t i) const;
  int end_letter(std::size_t i) const;

  static BlockDecomposition parse(std::string_view text);

  auto operator<=>(const BlockDecomposition&) const = default;
  bool operator==(const BlockDecomposition&) const = default;
};

std::string to_string(const BlockDecomposition& b);

BlockDecomposition block_decompose(const Word& w);
Word word_of(const BlockDecomposition& b);
// Block integral word with eps1 = 0.
Word block_word(const std::vector<int>& lengths);

int weight(const BlockDecomposition& b);
bool is_trivial(const BlockDecomposition& b);
bool is_divergent(const BlockDecomposition& b);
Signed<BlockDecomposition> dual(const BlockDecomposition& b);

struct ZetaComposition {
  std::vector<int> args;

  int weight() const;
  int depth() const { return static_cast<int>(args.size()); }
  bool is_convergent() const { return args.empty() || args.back() >= 2; }

  static ZetaComposition parse(std::string_view text);

  auto operator<=>(const ZetaComposition&) const = default;
  bool operator==(const ZetaComposition&) const = default;
};

std::string to_string(const ZetaComposition& s);

Signed<Word> mzv_to_word(const ZetaComposition& s);
Signed<ZetaComposition> word_to_mzv(const Word& w);

}  // namespace mzv
