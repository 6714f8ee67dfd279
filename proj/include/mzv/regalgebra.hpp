#pragma once

#include <string_view>

#include "mzv/blockcore.hpp"
#include "mzv/lincomb.hpp"

namespace mzv {

using WordComb = LinComb<Word>;
using ZetaComb = LinComb<ZetaComposition>;

// I(w) for w = 0 0^k 1 0^{n1-1} ... 1 0^{nr-1} 1 with k >= 1, rewritten as
// words with a1 = 1.
WordComb divergence_relation(const Word& w);

ZetaComb regularise(const Word& w);
ZetaComb regularise(const WordComb& c);

// All interleavings of two interior letter strings, wrapped as 0 ... 1.
WordComb shuffle_words(std::string_view u, std::string_view v);

ZetaComb stuffle_depth1(int n, const ZetaComposition& s);

Rational bernoulli(int n);
mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

// zeta(2k) = q pi^{2k}.
PiRational zeta_even_coeff(int k);
// zeta({2}^m) = pi^{2m} / (2m+1)!.
PiRational zeta_twos_coeff(int m);

// zeta({2}^m) as a composition.
ZetaComposition twos(int m);

}  // namespace mzv
