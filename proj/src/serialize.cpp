#include "mzv/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

std::string word_text(const Word& w) {
  return "I(" + std::to_string(w.front()) + ";" + std::string(w.interior()) + ";" + std::to_string(w.back()) + ")";
}

std::string tensor_text(const TensorTerm& t) {
  return word_text(t.left) + " (x) " + word_text(t.right);
}

std::string pi_text(int e) {
  if (e == 0) return "";
  return e == 1 ? "pi" : "pi^" + std::to_string(e);
}

template <class Key, class Render>
std::string comb_text(const LinComb<Key>& c, Render&& render) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coeff] : c) {
    Rational mag = abs(coeff);
    if (first)
      out += sgn(coeff) < 0 ? "-" : "";
    else
      out += sgn(coeff) < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += rational_text(mag) + " ";
    if (term.second != 0) out += pi_text(term.second) + " ";
    out += render(term.first);
  }
  return out;
}

template <class Key, class Render>
Json comb_json(const LinComb<Key>& c, const char* kind, Render&& render) {
  Json arr = Json::array();
  for (const auto& [term, coeff] : c) {
    Json j = {{"term_kind", kind},
              {"term", render(term.first)},
              {"coeff_num", coeff.get_num().get_str()},
              {"coeff_den", coeff.get_den().get_str()},
              {"pi_exp", term.second}};
    arr.push_back(std::move(j));
  }
  return arr;
}

Rational rational_from_json(const Json& num, const Json& den) {
  auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()); };
  Rational q(mpz_class(text(num)), mpz_class(text(den)));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in JSON coefficient");
  q.canonicalize();
  return q;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

bool zeta_side(Family f) {
  switch (f) {
    case Family::Bbbl:
    case Family::Hoffman:
    case Family::GeneralHoffman:
    case Family::Cyc123:
    case Family::BowmanBradley:
    case Family::Z1333Compsum:
    case Family::Z13312Sym:
    case Family::Thm271:
      return true;
    default:
      return false;
  }
}

std::string latex_lengths(const std::vector<int>& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) out += (i ? "," : "") + std::to_string(l[i]);
  return out;
}

// The term as it is written in the identity, with the sign it picks up.
std::pair<std::string, int> latex_term(const Word& w, bool zeta_form) {
  if (zeta_form && is_convergent_form(w)) {
    Signed<ZetaComposition> s = word_to_mzv(w);
    try {
      return {to_latex(Zeta123Form::from_composition(s.value)), s.sign};
    } catch (const std::invalid_argument&) {
      return {"\\zeta(" + latex_lengths(s.value.args) + ")", s.sign};
    }
  }
  BlockDecomposition b = block_decompose(w);
  std::string inner = latex_lengths(b.lengths);
  if (b.eps1 != 0) inner = "1;" + inner;
  return {"I_{\\mathrm{bl}}(" + inner + ")", 1};
}

}  // namespace

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string to_text(const WordComb& c) { return comb_text(c, word_text); }
std::string to_text(const ZetaComb& c) {
  return comb_text(c, [](const ZetaComposition& s) { return to_string(s); });
}
std::string to_text(const TensorComb& c) {
  return comb_text(c, [](const TensorTerm& t) { return "D" + std::to_string(t.grade) + "[" + tensor_text(t) + "]"; });
}

Json to_json(const WordComb& c) {
  return comb_json(c, "word", [](const Word& w) { return w.str(); });
}
Json to_json(const ZetaComb& c) {
  return comb_json(c, "zeta", [](const ZetaComposition& s) { return to_string(s); });
}
Json to_json(const TensorComb& c) {
  Json arr = Json::array();
  for (const auto& [term, coeff] : c) {
    arr.push_back({{"term_kind", "tensor"},
                   {"grade", term.first.grade},
                   {"left_word", term.first.left.str()},
                   {"right_word", term.first.right.str()},
                   {"coeff_num", coeff.get_num().get_str()},
                   {"coeff_den", coeff.get_den().get_str()},
                   {"pi_exp", term.second}});
  }
  return arr;
}

WordComb word_comb_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("linear combination must be a JSON array");
  WordComb out;
  for (const Json& t : j) {
    if (t.value("term_kind", "word") != "word") throw std::invalid_argument("expected word terms");
    out.add(Word::parse(t.at("term").get<std::string>()), rational_from_json(t.at("coeff_num"), t.at("coeff_den")),
            t.value("pi_exp", 0));
  }
  return out;
}

Json to_json(const Rhs& r) {
  switch (r.kind) {
    case Rhs::Kind::Zero: return {{"kind", "zero"}};
    case Rhs::Kind::UnknownZetaMultiple: return {{"kind", "unknown-zeta-multiple"}};
    case Rhs::Kind::PiMultiple:
      return {{"kind", "pi"},
              {"coeff_num", r.value.coeff.get_num().get_str()},
              {"coeff_den", r.value.coeff.get_den().get_str()},
              {"pi_exp", r.value.pi_exp}};
  }
  return {};
}

Rhs rhs_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return {};
  if (kind == "unknown-zeta-multiple") return Rhs{Rhs::Kind::UnknownZetaMultiple, {}};
  if (kind == "pi")
    return Rhs{Rhs::Kind::PiMultiple,
               PiRational{rational_from_json(j.at("coeff_num"), j.at("coeff_den")), j.at("pi_exp").get<int>()}};
  throw std::invalid_argument("unknown rhs kind '" + kind + "'");
}

Json to_json(const Identity& id) {
  return {{"family", family_name(id.family)},
          {"params", id.params},
          {"weight", id.weight},
          {"lhs", to_json(id.lhs)},
          {"rhs", to_json(id.rhs)}};
}

Identity identity_from_json(const Json& j) {
  Identity id;
  id.family = family_from_name(j.at("family").get<std::string>());
  id.params = j.value("params", Json::object());
  id.weight = j.at("weight").get<int>();
  id.lhs = word_comb_from_json(j.at("lhs"));
  id.rhs = rhs_from_json(j.at("rhs"));
  for (const auto& [term, c] : id.lhs)
    if (term.first.weight() + term.second != id.weight)
      throw std::invalid_argument("term " + term.first.str() + " does not have weight " + std::to_string(id.weight));
  return id;
}

std::vector<Identity> identities_from_json(const Json& j) {
  std::vector<Identity> out;
  if (j.is_array())
    for (const Json& e : j) out.push_back(identity_from_json(e));
  else
    out.push_back(identity_from_json(j));
  return out;
}

std::string to_text(const Identity& id) {
  std::string rhs;
  switch (id.rhs.kind) {
    case Rhs::Kind::Zero: rhs = "0"; break;
    case Rhs::Kind::UnknownZetaMultiple: rhs = "q z(" + std::to_string(id.weight) + "), q rational"; break;
    case Rhs::Kind::PiMultiple: rhs = rational_text(id.rhs.value.coeff) + " " + pi_text(id.rhs.value.pi_exp); break;
  }
  return family_name(id.family) + " " + id.params.dump() + ", weight " + std::to_string(id.weight) + "\n  " +
         to_text(id.lhs) + "\n  = " + rhs;
}

std::string to_latex(const Identity& id) {
  const bool zf = zeta_side(id.family);
  std::string out;
  bool first = true;
  for (const auto& [term, coeff] : id.lhs) {
    auto [body, sign] = latex_term(term.first, zf);
    Rational c = sign > 0 ? coeff : Rational(-coeff);
    out += sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out += latex_rational(mag) + " ";
    if (term.second != 0) out += "\\pi^{" + std::to_string(term.second) + "} ";
    out += body;
  }
  if (first) out = "0";
  out += " \\doteq ";
  switch (id.rhs.kind) {
    case Rhs::Kind::Zero: out += "0"; break;
    case Rhs::Kind::UnknownZetaMultiple: out += "\\zeta(" + std::to_string(id.weight) + ") \\mathbb{Q}"; break;
    case Rhs::Kind::PiMultiple: {
      const Rational& q = id.rhs.value.coeff;
      out += (sgn(q) < 0 ? "-" : "") + latex_rational(abs(q)) + " \\pi^{" + std::to_string(id.rhs.value.pi_exp) + "}";
      break;
    }
  }
  return out;
}

Json to_json(const KernelReport& r) {
  return {{"vanishes", r.vanishes}, {"weight", r.weight}, {"residue", to_json(r.residue)}, {"conclusion", r.conclusion}};
}

std::string to_text(const KernelReport& r) {
  std::string out = r.conclusion + "\n";
  if (!r.vanishes) out += "  residue: " + to_text(r.residue) + "\n";
  return out;
}

Json to_json(const StabilityReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json classes = Json::array();
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
      const auto& c = g.classes[i];
      classes.push_back({{"lengths", c.lengths},
                         {"coeff", rational_text(c.coeff)},
                         {"full", c.full},
                         {"original_lengths", g.original_lengths[i]}});
    }
    groups.push_back({{"left_word", g.left.str()},
                      {"left_lengths", g.left_lengths},
                      {"classes", classes},
                      {"block_count_law", g.block_count_law}});
  }
  return {{"r", r.r}, {"lengths", r.lengths}, {"all_cyclic", r.all_cyclic}, {"groups", groups}};
}

std::string to_text(const StabilityReport& r) {
  std::ostringstream out;
  out << "D" << r.r << " stability: " << (r.all_cyclic ? "every class is a full cyclic sum" : "non-cyclic classes present")
      << "\n";
  for (const auto& g : r.groups) {
    out << "  left " << word_text(g.left) << " blocks " << latex_lengths(g.left_lengths) << "\n";
    for (const auto& c : g.classes)
      out << "    " << rational_text(c.coeff) << " x C(" << latex_lengths(c.lengths) << ")"
          << (c.full ? "" : " [partial]") << "\n";
  }
  return out.str();
}

Json to_json(const VerificationReport& r) {
  Json j = {{"identity", r.identity},
            {"weight", r.weight},
            {"digits", r.digits},
            {"status", status_name(r.status)},
            {"residual", r.residual.value.to_string(12)},
            {"error_bound", r.residual.err.to_string(6)},
            {"digits_matched", r.digits_matched},
            {"elapsed_seconds", r.elapsed_seconds}};
  if (r.zeta_ratio) j["zeta_ratio"] = rational_text(*r.zeta_ratio);
  return j;
}

std::string to_text(const VerificationReport& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_seconds);
  std::string out = status_name(r.status) + "  " + r.identity + "  weight " + std::to_string(r.weight) +
                    "  residual " + r.residual.value.to_string(6) + " (err " + r.residual.err.to_string(3) +
                    ")  digits " + std::to_string(r.digits_matched) + "/" + std::to_string(r.digits) + "  " +
                    elapsed + "s";
  if (r.zeta_ratio) out += "  ratio " + rational_text(*r.zeta_ratio);
  return out;
}

Json to_json(const TableRow& r) {
  Json j = {{"weight", r.weight}, {"overall", r.overall}};
  if (r.expected.fits_slong_p())
    j["expected"] = r.expected.get_si();
  else
    j["expected"] = r.expected.get_str();
  for (const auto& [f, c] : r.families)
    j[rank_family_name(f)] = {{"init", c.init}, {"rank", c.rank}, {"numeric_failures", c.numeric_failures}};
  return j;
}

std::string to_text(const TableRow& r) {
  std::ostringstream out;
  out << "N=" << r.weight;
  for (const auto& [f, c] : r.families) {
    out << "  " << rank_family_name(f) << " " << c.init << "|" << c.rank;
    if (c.numeric_failures) out << " (" << c.numeric_failures << " failed numerically)";
  }
  out << "  overall " << r.overall << "  expected " << r.expected.get_str();
  return out.str();
}

std::string to_latex(const TableRow& r) {
  std::ostringstream out;
  out << r.weight;
  for (const auto& [f, c] : r.families) out << " & " << c.init << " & " << c.rank;
  out << " & " << r.overall << " & " << r.expected.get_str() << " \\\\";
  return out.str();
}

}  // namespace mzv
