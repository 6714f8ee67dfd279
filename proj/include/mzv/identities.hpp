#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mzv/blockcore.hpp"
#include "mzv/regalgebra.hpp"

namespace mzv {

enum class Family {
  Symmetric,
  CyclicBasic,
  CyclicFull,
  Bbbl,
  Hoffman,
  GeneralHoffman,
  Cyc123,
  AltoddEven,
  AltoddOdd,
  BowmanBradley,
  Z1333Compsum,
  Z13312Sym,
  Thm271,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Rhs {
  enum class Kind { Zero, PiMultiple, UnknownZetaMultiple };
  Kind kind = Kind::Zero;
  PiRational value;  // PiMultiple: coeff * pi^N
};

struct Identity {
  Family family = Family::Symmetric;
  nlohmann::json params = nlohmann::json::object();
  int weight = 0;
  WordComb lhs;
  Rhs rhs;

  // lhs - rhs; a pi^N constant is stored against the word "01".
  WordComb difference() const;
};

enum class Arg123 { One, Three, OneTwo };

// zeta(a_1, ..., a_{n-1} | b_1, ..., b_n) = zeta({2}^{b_1}, a_1, ..., a_{n-1}, {2}^{b_n}).
struct Zeta123Form {
  std::vector<Arg123> a;
  std::vector<int> b;

  bool is_valid() const;
  ZetaComposition expand() const;
  int weight() const;
  int depth() const;

  static Zeta123Form from_composition(const ZetaComposition& s);
  static Zeta123Form parse(std::string_view text);

  auto operator<=>(const Zeta123Form&) const = default;
  bool operator==(const Zeta123Form&) const = default;
};

std::string to_string(const Zeta123Form& z);
std::string to_latex(const Zeta123Form& z);

Signed<Zeta123Form> cyc(const Zeta123Form& z);
// (-1)^{wt/2 - d} from the a_i alone.
int cyc123_sign_from_args(const Zeta123Form& z);

Identity gen_symmetric(const BlockDecomposition& b);
Identity gen_cyclic_basic(const std::vector<int>& lengths);
std::vector<std::vector<int>> compute_Lk(const std::vector<int>& lengths, int k);

enum class CorrectionForm { Transcendental, Symbolic };
Identity gen_cyclic_full(const std::vector<int>& lengths, CorrectionForm form = CorrectionForm::Transcendental);

Identity gen_bbbl(const std::vector<int>& b);
Identity gen_hoffman(int b1, int b2, int b3, bool symmetrised = false);
Identity gen_cyc123(const Zeta123Form& z);
Identity gen_general_hoffman(int n, const std::vector<int>& b, int c);

enum class CompositionSum { BowmanBradley, Z1333, Further13332n };
CompositionSum composition_sum_from_name(const std::string& name);
Identity gen_composition_sums(CompositionSum kind, int m, int n = 1);

enum class SymFamily { Z13312Sym, Thm271 };
Identity gen_sym_family(SymFamily kind, const std::vector<int>& params);

Identity gen_altodd_even(const std::vector<int>& lengths);
// Conjecture rows from (l_1..l_{2n}, x); double_alt selects the standalone
// 4- and 6-block double antisymmetrisations instead.
Identity gen_altodd_odd(const std::vector<int>& lengths, int x, bool double_alt = false);

// Weak compositions of m into k parts, lexicographic.
std::vector<std::vector<int>> weak_compositions(int m, int k);
// Compositions of total into k positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int total, int k);
// Representatives of compositions of total into k parts modulo rotation.
std::vector<std::vector<int>> cyclic_representatives(int total, int k);

}  // namespace mzv
