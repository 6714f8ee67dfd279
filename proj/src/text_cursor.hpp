#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/blockcore.hpp"

namespace mzv::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }
  std::string_view text() const { return text_; }
  void seek(std::size_t pos) { pos_ = pos; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    std::size_t begin = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == begin) fail("expected a non-negative integer");
    return static_cast<int>(value);
  }

  std::vector<int> integer_list(char separator = ',') {
    std::vector<int> out{integer()};
    while (accept(separator)) out.push_back(integer());
    return out;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos_), pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace mzv::detail
