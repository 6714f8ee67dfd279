#pragma once

#include <string>
#include <vector>

#include "mzv/blockcore.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/regalgebra.hpp"

namespace mzv {

struct TensorTerm {
  Word left;
  Word right;
  int grade = 0;

  auto operator<=>(const TensorTerm&) const = default;
  bool operator==(const TensorTerm&) const = default;
};

using TensorComb = LinComb<TensorTerm>;

// Least word among {w, reverse, flip, reverse+flip} with the accumulated sign.
// Sign 0 means the word is forced to vanish by one of these symmetries.
Signed<Word> canonical_left(const Word& w);

TensorComb d_r(const WordComb& c, int r);
TensorComb d_less_than_N(const WordComb& c);

struct KernelReport {
  bool vanishes = false;
  int weight = 0;
  TensorComb residue;
  std::string conclusion;
};

KernelReport kernel_report(const WordComb& c);

struct CyclicClass {
  std::vector<int> lengths;  // representative rotation
  Rational coeff;            // common coefficient of each distinct rotation
  bool full = false;         // every rotation present with the same coefficient
};

struct StabilityGroup {
  Word left;
  std::vector<int> left_lengths;
  std::vector<CyclicClass> classes;
  // Per class: for each right block, true when it is an original length.
  std::vector<std::vector<bool>> original_lengths;
  bool block_count_law = true;  // m + k = n + 1 for every class
};

struct StabilityReport {
  int r = 0;
  std::vector<int> lengths;
  std::vector<StabilityGroup> groups;
  bool all_cyclic = true;
};

StabilityReport stability_shape(const std::vector<int>& lengths, int r);

// Replace every full cyclic class of right factors of even weight M by
// I_bl(M+2); classes of odd weight vanish.
TensorComb collapse_cyclic(const TensorComb& c);

}  // namespace mzv
