#pragma once

#include <string>
#include <vector>

#include "mzv/identities.hpp"
#include "mzv/regalgebra.hpp"

namespace mzv {

// d_N = d_{N-2} + d_{N-3}, d_0 = 1, d_1 = 0, d_2 = 1.
mpz_class zagier_dim(int n);

// Convergent compositions of weight N ordered by their words read as binary integers.
std::vector<ZetaComposition> basis(int n);

// Exact relation among weight-N MZVs; pi powers are folded into the basis.
ZetaComb vectorize(const WordComb& difference, int n);
ZetaComb vectorize(const Identity& id);

std::vector<Rational> to_dense(const ZetaComb& row, const std::vector<ZetaComposition>& basis);

enum class RankFamily { Cyclic, Altodd, Duality };
std::string rank_family_name(RankFamily f);
RankFamily rank_family_from_name(const std::string& name);

std::vector<ZetaComb> family_rows(int n, RankFamily family);

// Fraction-free (Bareiss) rank over Q.
std::size_t rank_of(const std::vector<std::vector<Rational>>& rows);
std::size_t rank_of(const std::vector<ZetaComb>& rows, int n);

struct FamilyCount {
  std::size_t init = 0;
  std::size_t rank = 0;
  std::size_t numeric_failures = 0;
};

struct TableRow {
  int weight = 0;
  std::vector<std::pair<RankFamily, FamilyCount>> families;
  std::size_t overall = 0;
  mpz_class expected;
};

struct TableOptions {
  std::vector<RankFamily> families{RankFamily::Cyclic, RankFamily::Altodd, RankFamily::Duality};
  // Rows failing a numerical check at this many digits are dropped; 0 disables.
  int check_digits = 30;
};

TableRow table_row(int n, const TableOptions& opts = {});

}  // namespace mzv
