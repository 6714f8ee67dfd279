#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mzv/derivation.hpp"
#include "mzv/identities.hpp"
#include "mzv/rank.hpp"
#include "mzv/verify.hpp"

namespace mzv {

using Json = nlohmann::json;

std::string rational_text(const Rational& q);

// Plain text, e.g. "2 z(2,3) + z(3,2) + 6 z(1,4)".
std::string to_text(const WordComb& c);
std::string to_text(const ZetaComb& c);
std::string to_text(const TensorComb& c);

Json to_json(const WordComb& c);
Json to_json(const ZetaComb& c);
Json to_json(const TensorComb& c);
WordComb word_comb_from_json(const Json& j);

Json to_json(const Rhs& r);
Rhs rhs_from_json(const Json& j);

Json to_json(const Identity& id);
Identity identity_from_json(const Json& j);
// A single identity object or an array of them.
std::vector<Identity> identities_from_json(const Json& j);

std::string to_text(const Identity& id);
std::string to_latex(const Identity& id);

Json to_json(const KernelReport& r);
std::string to_text(const KernelReport& r);
Json to_json(const StabilityReport& r);
std::string to_text(const StabilityReport& r);

Json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

Json to_json(const TableRow& r);
std::string to_text(const TableRow& r);
std::string to_latex(const TableRow& r);

}  // namespace mzv
