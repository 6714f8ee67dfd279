#include "mzv/cli.hpp"

#include <algorithm>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mzv/derivation.hpp"
#include "mzv/identities.hpp"
#include "mzv/rank.hpp"
#include "mzv/regalgebra.hpp"
#include "mzv/serialize.hpp"
#include "mzv/verify.hpp"

namespace mzv {

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string format = "text";
  int digits = 50;
  int jobs = 1;
  std::vector<int> lengths, b, weights;
  int m = 0, n = 1, x = 0, c = 0, r = 0;
  std::string form;
  std::vector<std::string> families;
  long long max_den = 1'000'000;
  bool symbolic = false, symmetrised = false, double_alt = false, stability = false, cyclic = false;
  int check_digits = 30;
  std::string target;  // positional argument
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format format_of(const Options& o, const char* fallback = nullptr) {
  std::string f = o.format.empty() && fallback ? fallback : o.format;
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "latex") return Format::Latex;
  throw UsageError("--format must be text, json or latex");
}

// Accepts "0101", "I(0;10;1)" and "0;1,0;1".
Word parse_word_arg(const std::string& text) {
  std::string t = text;
  if (t.size() >= 2 && t[0] == 'I' && t[1] == '(') {
    if (t.back() != ')') throw ParseError("missing ')' at position " + std::to_string(t.size()), t.size());
    t = t.substr(2, t.size() - 3);
  }
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == ';' || ch == ',' || ch == ' '; }), t.end());
  return Word::parse(t);
}

std::string latex_zeta_comb(const ZetaComb& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, q] : c) {
    out += sgn(q) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    first = false;
    Rational mag = abs(q);
    if (mag != 1) out += mag.get_den() == 1 ? mag.get_str() + " " : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "} ";
    if (term.second) out += "\\pi^{" + std::to_string(term.second) + "} ";
    std::string args;
    for (std::size_t i = 0; i < term.first.args.size(); ++i) args += (i ? "," : "") + std::to_string(term.first.args[i]);
    out += "\\zeta(" + args + ")";
  }
  return out;
}

void need(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

Identity generate(const std::string& family, const Options& o) {
  if (family == "symmetric") {
    need(!o.lengths.empty(), "symmetric needs --lengths");
    return gen_symmetric(BlockDecomposition{0, o.lengths});
  }
  if (family == "cyclic-basic") {
    need(!o.lengths.empty(), "cyclic-basic needs --lengths");
    return gen_cyclic_basic(o.lengths);
  }
  if (family == "cyclic-full") {
    need(!o.lengths.empty(), "cyclic-full needs --lengths");
    return gen_cyclic_full(o.lengths, o.symbolic ? CorrectionForm::Symbolic : CorrectionForm::Transcendental);
  }
  if (family == "bbbl") {
    need(!o.b.empty(), "bbbl needs --b");
    return gen_bbbl(o.b);
  }
  if (family == "hoffman") {
    need(o.b.size() == 3, "hoffman needs --b b1,b2,b3");
    return gen_hoffman(o.b[0], o.b[1], o.b[2], o.symmetrised);
  }
  if (family == "general-hoffman") {
    need(!o.b.empty(), "general-hoffman needs --n, --b and --c");
    return gen_general_hoffman(o.n, o.b, o.c);
  }
  if (family == "cyc123") {
    need(!o.form.empty(), "cyc123 needs --form, e.g. \"z(1,3,3,3|0,0,0,0,1)\"");
    return gen_cyc123(Zeta123Form::parse(o.form));
  }
  if (family == "bowman-bradley" || family == "z1333-compsum" || family == "further-13332n")
    return gen_composition_sums(composition_sum_from_name(family), o.m, o.n);
  if (family == "z13312-sym") {
    need(o.b.size() == 5, "z13312-sym needs --b b1,...,b5");
    return gen_sym_family(SymFamily::Z13312Sym, o.b);
  }
  if (family == "thm-2-7-1") return gen_sym_family(SymFamily::Thm271, {o.m});
  if (family == "altodd-even") {
    need(!o.lengths.empty(), "altodd-even needs --lengths");
    return gen_altodd_even(o.lengths);
  }
  if (family == "altodd-odd") {
    need(!o.lengths.empty(), "altodd-odd needs --lengths (and --x unless --double-alt)");
    return gen_altodd_odd(o.lengths, o.x, o.double_alt);
  }
  throw UsageError("unknown family '" + family + "'");
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_decompose(const Options& o, std::ostream& out) {
  Word w = parse_word_arg(o.target);
  BlockDecomposition b = block_decompose(w);
  if (format_of(o) == Format::Json)
    emit_json(out, {{"word", w.str()},
                    {"eps1", b.eps1},
                    {"lengths", b.lengths},
                    {"weight", weight(b)},
                    {"trivial", is_trivial(b)},
                    {"divergent", is_divergent(w)}});
  else
    out << to_string(b) << "\n";
  return kExitOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  BlockDecomposition b = o.lengths.empty() ? BlockDecomposition::parse(o.target) : BlockDecomposition{0, o.lengths};
  Word w = word_of(b);
  if (format_of(o) == Format::Json)
    emit_json(out, {{"decomposition", to_string(b)}, {"word", w.str()}, {"weight", w.weight()}});
  else
    out << w.str() << "\n";
  return kExitOk;
}

int cmd_mzv(const Options& o, std::ostream& out) {
  ZetaComposition s;
  Word w;
  int sign = 1;
  if (!o.target.empty() && (o.target[0] == 'z' || o.target[0] == '(')) {
    s = ZetaComposition::parse(o.target[0] == 'z' ? o.target : "z" + o.target);
    Signed<Word> sw = mzv_to_word(s);
    w = sw.value;
    sign = sw.sign;
  } else {
    w = parse_word_arg(o.target);
    Signed<ZetaComposition> sz = word_to_mzv(w);
    s = sz.value;
    sign = sz.sign;
  }
  BigReal v = eval_mzv(s, o.digits);
  switch (format_of(o)) {
    case Format::Json:
      emit_json(out, {{"zeta", to_string(s)}, {"word", w.str()}, {"sign", sign}, {"value", v.to_string(o.digits)},
                      {"digits", o.digits}});
      break;
    case Format::Latex:
      out << latex_zeta_comb(ZetaComb(s)) << " = " << (sign < 0 ? "-" : "") << "I(" << w.str() << ") = "
          << v.to_string(o.digits) << "\n";
      break;
    case Format::Text:
      out << to_string(s) << " = " << (sign < 0 ? "-" : "") << "I(" << w.front() << ";" << w.interior() << ";"
          << w.back() << ")\n"
          << v.to_string(o.digits) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_regularise(const Options& o, std::ostream& out) {
  Word w = parse_word_arg(o.target);
  ZetaComb r = regularise(w);
  switch (format_of(o)) {
    case Format::Json: emit_json(out, {{"word", w.str()}, {"regularised", to_json(r)}}); break;
    case Format::Latex: out << latex_zeta_comb(r) << "\n"; break;
    case Format::Text: out << to_text(r) << "\n"; break;
  }
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  need(!o.target.empty(), "generate needs a family name");
  Identity id = generate(o.target, o);
  switch (format_of(o, "json")) {
    case Format::Json: emit_json(out, to_json(id)); break;
    case Format::Latex: out << to_latex(id) << "\n"; break;
    case Format::Text: out << to_text(id) << "\n"; break;
  }
  return kExitOk;
}

std::vector<Identity> read_identities(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<Identity> ids;
  // Either one JSON document or a stream of concatenated documents.
  std::istringstream stream(text);
  while (true) {
    stream >> std::ws;
    if (stream.peek() == std::char_traits<char>::eof()) break;
    Json j;
    try {
      stream >> j;
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("invalid JSON on stdin: ") + e.what());
    }
    for (Identity& id : identities_from_json(j)) ids.push_back(std::move(id));
  }
  if (ids.empty()) throw UsageError("verify expects identity JSON on stdin");
  return ids;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  need(o.digits >= 10, "--digits must be at least 10");
  const std::vector<Identity> ids = read_identities(in);
  std::vector<VerificationReport> reports(ids.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
  for (std::size_t start = 0; start < ids.size(); start += jobs) {
    std::vector<std::future<VerificationReport>> batch;
    for (std::size_t i = start; i < std::min(ids.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return verify(ids[i], o.digits); }));
    for (std::size_t k = 0; k < batch.size(); ++k) reports[start + k] = batch[k].get();
  }

  bool refuted = false;
  Json arr = Json::array();
  for (const auto& r : reports) {
    refuted |= r.status == VerifyStatus::Refuted;
    arr.push_back(to_json(r));
  }
  if (format_of(o) == Format::Json)
    emit_json(out, reports.size() == 1 ? arr[0] : arr);
  else
    for (const auto& r : reports) out << to_text(r) << "\n";
  return refuted ? kExitRefuted : kExitOk;
}

int cmd_dkernel(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  if (o.stability) {
    need(!o.lengths.empty() && o.r > 0, "--stability needs --lengths and --r");
    StabilityReport rep = stability_shape(o.lengths, o.r);
    if (f == Format::Json)
      emit_json(out, to_json(rep));
    else
      out << to_text(rep);
    return kExitOk;
  }

  WordComb comb;
  if (!o.lengths.empty()) {
    if (o.cyclic) {
      for (std::size_t i = 0; i < o.lengths.size(); ++i) {
        std::vector<int> rot = o.lengths;
        std::rotate(rot.begin(), rot.begin() + static_cast<long>(i), rot.end());
        comb.add(block_word(rot), 1);
      }
    } else {
      comb = gen_symmetric(BlockDecomposition{0, o.lengths}).lhs;
    }
  } else {
    for (const Identity& id : read_identities(in))
      for (const auto& [term, c] : id.lhs)
        if (term.second == 0) comb.add(term.first, c);
  }

  if (o.r > 0) {
    TensorComb res = d_r(comb, o.r);
    if (o.cyclic) res = collapse_cyclic(res);
    if (f == Format::Json)
      emit_json(out, {{"r", o.r}, {"residue", to_json(res)}});
    else
      out << to_text(res) << "\n";
    return kExitOk;
  }

  KernelReport rep = kernel_report(comb);
  if (f == Format::Json)
    emit_json(out, to_json(rep));
  else
    out << to_text(rep);
  return kExitOk;
}

std::vector<RankFamily> families_of(const Options& o) {
  if (o.families.empty()) return TableOptions{}.families;
  std::vector<RankFamily> out;
  for (const auto& f : o.families) out.push_back(rank_family_from_name(f));
  return out;
}

int cmd_rank(const Options& o, std::ostream& out, bool header) {
  need(!o.weights.empty(), "--weight is required");
  TableOptions opts;
  opts.families = families_of(o);
  opts.check_digits = o.check_digits;
  const Format f = format_of(o);
  Json arr = Json::array();
  if (header && f == Format::Text) out << "weight  family init|rank ...  overall  expected\n";
  for (int n : o.weights) {
    need(n >= 3 && n <= 16, "--weight must be between 3 and 16");
    TableRow row = table_row(n, opts);
    if (f == Format::Json)
      arr.push_back(to_json(row));
    else
      out << (f == Format::Latex ? to_latex(row) : to_text(row)) << "\n";
  }
  if (f == Format::Json) emit_json(out, arr.size() == 1 ? arr[0] : arr);
  return kExitOk;
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  const auto dash = text.find('-');
  try {
    if (dash != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dash));
      const int hi = std::stoi(text.substr(dash + 1));
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string part;
      while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    }
  } catch (const std::exception&) {
    throw UsageError("--weight expects N, N1,N2 or LO-HI");
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block decompositions, regularisation and numerical checks for multiple zeta values", "mzv"};
  app.require_subcommand(1);
  Options o;
  std::string weight_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "decimal digits (default 50)")->check(CLI::Range(10, 5000));
  };

  auto* decompose = app.add_subcommand("decompose", "alternating block decomposition of a binary word");
  decompose->add_option("word", o.target, "binary word with bounds, e.g. 0101001110101010")->required();
  add_common(decompose);

  auto* word = app.add_subcommand("word", "word of a block decomposition");
  word->add_option("decomposition", o.target, "e.g. \"(0; 5,2,1,7)\"");
  word->add_option("--lengths", o.lengths)->delimiter(',');
  add_common(word);

  auto* mzvc = app.add_subcommand("mzv", "convert between z(s1,...,sk) and words and evaluate");
  mzvc->add_option("value", o.target, "z(2,3) or a convergent word")->required();
  add_common(mzvc);
  add_digits(mzvc);

  auto* reg = app.add_subcommand("regularise", "shuffle-regularise I(word) into convergent MZVs");
  reg->add_option("word", o.target, "e.g. 0010111")->required();
  add_common(reg);

  auto* gen = app.add_subcommand("generate", "generate an identity (JSON by default)");
  gen->add_option("family", o.target, "identity family")->required();
  gen->add_option("--lengths", o.lengths, "block lengths")->delimiter(',');
  gen->add_option("--b", o.b, "2-block exponents")->delimiter(',');
  gen->add_option("--m", o.m);
  gen->add_option("--n", o.n);
  gen->add_option("--x", o.x);
  gen->add_option("--c", o.c, "distinguished exponent for general-hoffman");
  gen->add_option("--form", o.form, "123 form, e.g. \"z(1,3,3,(1,2)|0,0,0,0,0)\"");
  gen->add_flag("--symbolic", o.symbolic, "cyclic-full correction as I_bl(2k+2) products");
  gen->add_flag("--symmetrised", o.symmetrised, "symmetrised Hoffman variant");
  gen->add_flag("--double-alt", o.double_alt, "4/6-block double antisymmetrisation");
  gen->add_option("--format", o.format, "json (default), text or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  o.format.clear();

  auto* ver = app.add_subcommand("verify", "verify identities read as JSON from stdin");
  add_common(ver);
  add_digits(ver);
  ver->add_option("--jobs", o.jobs, "parallel identities")->check(CLI::PositiveNumber);

  auto* dk = app.add_subcommand("dkernel", "D_<N kernel check, D_r residues and stability shape");
  dk->add_option("--lengths", o.lengths, "symmetric (or with --cyclic, cyclic) sum over these lengths")
      ->delimiter(',');
  dk->add_option("--r", o.r, "single odd r for a D_r residue");
  dk->add_flag("--cyclic", o.cyclic, "use the cyclic sum and collapse full cyclic classes");
  dk->add_flag("--stability", o.stability, "report the stability shape of D_r on the cyclic sum");
  add_common(dk);

  auto* rank = app.add_subcommand("rank", "rank of relation families at weight N");
  rank->add_option("--weight", weight_text, "N, N1,N2 or LO-HI")->required();
  rank->add_option("--families", o.families, "cyclic,altodd,duality")->delimiter(',');
  rank->add_option("--check-digits", o.check_digits, "numerical check of each row (0 disables)");
  add_common(rank);

  auto* table = app.add_subcommand("table", "rows of the rank table");
  table->add_option("--weight", weight_text, "N, N1,N2 or LO-HI")->required();
  table->add_option("--check-digits", o.check_digits, "numerical check of each row (0 disables)");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (o.format.empty() && !gen->parsed()) o.format = "text";

  try {
    if (!weight_text.empty()) o.weights = parse_weights(weight_text);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (word->parsed()) return cmd_word(o, out);
    if (mzvc->parsed()) return cmd_mzv(o, out);
    if (reg->parsed()) return cmd_regularise(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (ver->parsed()) return cmd_verify(o, in, out);
    if (dk->parsed()) return cmd_dkernel(o, in, out);
    if (rank->parsed()) return cmd_rank(o, out, false);
    if (table->parsed()) return cmd_rank(o, out, true);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mzv
