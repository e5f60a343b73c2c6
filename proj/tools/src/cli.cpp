// Copyright 2026 The kltcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kltcalc/error.hpp"
#include "kltcalc/flag.hpp"
#include "kltcalc/horo.hpp"
#include "kltcalc/json_io.hpp"
#include "kltcalc/oracle.hpp"
#include "kltcalc/roots.hpp"
#include "kltcalc/toric.hpp"

namespace kltcalc::cli {

namespace {

using json_io::Json;

constexpr const char* kNamingNote =
    "Simple roots are named a1..an, numbered left to right across the "
    "components of a product type (in B2xA1, a3 is the A1 root). Weyl words "
    "are written s2,s1 and act right to left. Rationals are integers or p/q; "
    "floats are rejected.";

struct Options {
  std::string type;
  std::vector<std::string> levi;
  std::vector<std::string> d;
  std::string word;
  bool word_given = false;
  std::string file;
  int max_rank = 4;
  std::vector<std::string> types;
  bool timing = false;
  bool no_words = false;
  bool no_klt = false;
  unsigned threads = 0;
  std::string weight;
  std::string coroot;
  std::string root;
  std::string character;
  std::string pullback;
  std::vector<std::string> values;
  std::vector<std::string> at;
  bool resolution_only = false;
  bool json = false;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string weight_label(const Weight& w, const char* symbol) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    const Rational& c = w.coords()[i];
    if (c == 0) continue;
    std::string term = symbol + std::to_string(i + 1);
    std::string coef = c == 1 ? "" : c == -1 ? "-" : to_string(c);
    if (!out.empty()) out += c < 0 ? " " : " + ";
    out += coef + term;
  }
  return out.empty() ? "0" : out;
}

Json int_json(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords()) a.push_back(json_io::to_json(c));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_levi(const RootDatum& datum, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) {
    if (!n.empty()) out.push_back(parse_simple_root(n, datum.rank()));
  }
  return out;
}

flag::FlagBoundary parse_boundary(const RootDatum& datum, const std::vector<std::string>& items) {
  flag::FlagBoundary d;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse, "boundary coefficient \"" + item + "\" is not aK=p/q");
    }
    const int alpha = parse_simple_root(item.substr(0, eq), datum.rank());
    if (!d.coefficients.emplace(alpha, parse_rational(item.substr(eq + 1))).second) {
      throw Error(ErrorCode::kParse, "coefficient of " + item.substr(0, eq) + " given twice");
    }
  }
  return d;
}

struct Term {
  Rational coef;
  std::string symbol;  // "w3", "a1", "rho" or "" for a bare number
};

// "-w1+3/2w2", "a1+2a2", "2rho". Whitespace and '*' are ignored.
std::vector<Term> parse_terms(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '*') t += c;
  }
  if (t.empty()) throw Error(ErrorCode::kParse, "empty expression");
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < t.size()) {
    bool negative = false;
    if (t[i] == '+' || t[i] == '-') {
      negative = t[i] == '-';
      ++i;
    } else if (!out.empty()) {
      throw Error(ErrorCode::kParse, "expected + or - in \"" + t + "\"");
    }
    std::size_t j = i;
    while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
    Rational coef = j > i ? parse_rational(t.substr(i, j - i)) : Rational(1);
    std::size_t k = j;
    while (k < t.size() && t[k] != '+' && t[k] != '-') ++k;
    std::string symbol = t.substr(j, k - j);
    if (j == i && symbol.empty()) throw Error(ErrorCode::kParse, "dangling sign in \"" + t + "\"");
    out.push_back({negative ? Rational(-coef) : coef, symbol});
    i = k;
  }
  return out;
}

int symbol_index(const std::string& symbol, std::size_t rank) {
  return parse_simple_root("a" + symbol.substr(1), rank);
}

// Result is in the fundamental-weight basis.
Weight parse_weight(const RootDatum& datum, const std::string& text) {
  Weight w = Weight::zero(Basis::kFundamentalWeight, datum.rank());
  for (const auto& term : parse_terms(text)) {
    if (term.symbol.empty() && term.coef == 0) continue;  // literal 0
    if (term.symbol == "rho") {
      w += term.coef * datum.rho();
    } else if (!term.symbol.empty() && term.symbol[0] == 'w') {
      w += term.coef * datum.fundamental_weight(symbol_index(term.symbol, datum.rank()));
    } else if (!term.symbol.empty() && term.symbol[0] == 'a') {
      const int i = symbol_index(term.symbol, datum.rank());
      w += term.coef * datum.to_basis(datum.simple_root(i), Basis::kFundamentalWeight);
    } else {
      throw Error(ErrorCode::kParse, "weight term \"" + term.symbol +
                                         "\" is not wK, aK or rho (w1 is a fundamental weight)");
    }
  }
  return w;
}

// Integer combination of simple roots, e.g. "a1+2a2".
IntVec parse_root_vector(const RootDatum& datum, const std::string& text) {
  IntVec v(datum.rank(), 0);
  for (const auto& term : parse_terms(text)) {
    if (term.symbol.empty() || term.symbol[0] != 'a' || term.coef.get_den() != 1) {
      throw Error(ErrorCode::kParse, "\"" + text + "\" is not an integer sum of aK");
    }
    v[symbol_index(term.symbol, datum.rank())] += term.coef.get_num().get_si();
  }
  return v;
}

std::size_t positive_root_of(const RootDatum& datum, const std::string& text) {
  const auto idx = datum.root_index(parse_root_vector(datum, text));
  if (!idx) throw Error(ErrorCode::kInvalidArgument, text + " is not a positive root of " + datum.name());
  return *idx;
}

IntVec parse_point(const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const Rational r = parse_rational(part);
    if (r.get_den() != 1) throw Error(ErrorCode::kParse, "lattice point \"" + text + "\" is not integral");
    v.push_back(r.get_num().get_si());
  }
  return v;
}

std::string signed_label(const IntVec& root) {
  bool negative = false;
  for (auto x : root) negative = negative || x < 0;
  if (!negative) return root_label(root);
  IntVec flipped = root;
  for (auto& x : flipped) x = -x;
  return "-(" + root_label(flipped) + ")";
}

Json levi_json(const std::vector<int>& levi) {
  Json a = Json::array();
  for (int i : levi) a.push_back(simple_root_name(i));
  return a;
}

std::string levi_text(const std::vector<int>& levi) {
  std::vector<std::string> names;
  for (int i : levi) names.push_back(simple_root_name(i));
  return "{" + join(names, ",") + "}";
}

// --- subcommands -----------------------------------------------------------

int cmd_roots(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const auto& roots = datum.positive_roots();
  if (o.json) {
    Json cartan = Json::array();
    for (const auto& row : datum.cartan()) cartan.push_back(row);
    Json list = Json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Json r;
      r["index"] = i + 1;
      r["root"] = int_json(roots[i]);
      r["coroot"] = int_json(datum.positive_coroots()[i]);
      r["height"] = height(roots[i]);
      list.push_back(std::move(r));
    }
    Json j;
    j["root_system"] = datum.name();
    j["rank"] = datum.rank();
    j["cartan"] = std::move(cartan);
    j["positive_roots"] = std::move(list);
    out << json_io::dump(j);
    return kOk;
  }
  out << "root system " << datum.name() << ", rank " << datum.rank() << ", "
      << roots.size() << " positive roots\n";
  out << "cartan matrix (row i: <alpha_j, alpha_i^vee>)\n";
  for (const auto& row : datum.cartan()) {
    out << ' ';
    for (int c : row) out << (c < 0 ? " " : "  ") << c;
    out << '\n';
  }
  out << "  #  height  root                coroot\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    char line[160];
    std::snprintf(line, sizeof line, "%3zu  %6d  %-18s  %s\n", i + 1, height(roots[i]),
                  root_label(roots[i]).c_str(),
                  root_label(datum.positive_coroots()[i]).c_str());
    out << line;
  }
  return kOk;
}

int cmd_parabolic(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const ParabolicData p = parabolic(datum, parse_levi(datum, o.levi));
  const auto& roots = datum.positive_roots();
  std::optional<std::map<int, Rational>> character;
  if (!o.character.empty()) {
    character = flag::schubert_divisor_of_character(datum, p, parse_weight(datum, o.character));
  }
  if (o.json) {
    Json levi_roots = Json::array(), other = Json::array();
    for (auto i : p.levi_positive_roots) levi_roots.push_back(int_json(roots[i]));
    for (auto i : p.non_levi_positive_roots) other.push_back(int_json(roots[i]));
    Json j;
    j["root_system"] = datum.name();
    j["I"] = levi_json(p.levi);
    j["levi_positive_roots"] = std::move(levi_roots);
    j["non_levi_positive_roots"] = std::move(other);
    j["levi_root_sum"] = weight_json(p.levi_root_sum);
    j["two_rho_P"] = weight_json(p.two_rho_superP);
    j["w0P_word"] = to_string(p.w0P_word);
    j["w0_levi_word"] = to_string(p.w0_levi_word);
    if (character) {
      Json dj = Json::object();
      for (const auto& [a, c] : *character) dj["D_" + simple_root_name(a)] = json_io::to_json(c);
      j["character_divisor"] = std::move(dj);
    }
    out << json_io::dump(j);
    return kOk;
  }
  std::vector<std::string> lr, nr;
  for (auto i : p.levi_positive_roots) lr.push_back(root_label(roots[i]));
  for (auto i : p.non_levi_positive_roots) nr.push_back(root_label(roots[i]));
  out << "root system " << datum.name() << ", I = " << levi_text(p.levi) << '\n';
  out << "R+_I:        {" << join(lr, ", ") << "}\n";
  out << "R+ \\ R+_I:   {" << join(nr, ", ") << "}\n";
  out << "2rho^P:      " << weight_label(p.two_rho_superP, "w") << '\n';
  out << "w0P word:    " << to_string(p.w0P_word) << '\n';
  out << "w0_I word:   " << to_string(p.w0_levi_word) << '\n';
  if (character) {
    std::vector<std::string> terms;
    for (const auto& [a, c] : *character) {
      if (c != 0) terms.push_back(to_string(c) + " D_" + simple_root_name(a));
    }
    out << "divisor of " << o.character << ": " << (terms.empty() ? "0" : join(terms, " + ")) << '\n';
  }
  out << "(w1..wn are the fundamental weights)\n";
  return kOk;
}

int cmd_bs(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const ParabolicData p = parabolic(datum, parse_levi(datum, o.levi));
  const WeylWord word = o.word_given ? parse_weyl_word(o.word, datum.rank()) : p.w0P_word;
  const auto betas = flag::beta_sequence(datum, p, word);
  std::vector<Rational> anti;
  for (auto b : betas) {
    anti.push_back(pairing(datum, datum.rho(), datum.positive_coroots()[b]) + 1);
  }
  std::vector<Rational> pulled;
  if (!o.pullback.empty()) {
    pulled = flag::pullback_coefficients(datum, p, parse_weight(datum, o.pullback), word);
  }
  if (o.json) {
    Json bj = Json::array(), aj = Json::array();
    for (auto b : betas) bj.push_back(int_json(datum.positive_roots()[b]));
    for (const auto& a : anti) aj.push_back(json_io::to_json(a));
    Json j;
    j["root_system"] = datum.name();
    j["I"] = levi_json(p.levi);
    j["word"] = to_string(word);
    j["betas"] = std::move(bj);
    j["anticanonical"] = std::move(aj);
    if (!o.pullback.empty()) {
      Json pj = Json::array();
      for (const auto& c : pulled) pj.push_back(json_io::to_json(c));
      j["pullback"] = std::move(pj);
    }
    out << json_io::dump(j);
    return kOk;
  }
  out << "root system " << datum.name() << ", I = " << levi_text(p.levi)
      << ", word " << to_string(word) << '\n';
  out << "  i  beta_i              -K coefficient"
      << (pulled.empty() ? "" : "  pullback of " + o.pullback) << '\n';
  for (std::size_t i = 0; i < betas.size(); ++i) {
    char line[200];
    std::snprintf(line, sizeof line, "%3zu  %-18s  %-14s", i + 1,
                  root_label(datum.positive_roots()[betas[i]]).c_str(),
                  to_string(anti[i]).c_str());
    std::string text = line;
    if (!pulled.empty()) text += "  " + to_string(pulled[i]);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return kOk;
}

int cmd_klt_flag(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const ParabolicData p = parabolic(datum, parse_levi(datum, o.levi));
  const flag::FlagBoundary d = parse_boundary(datum, o.d);
  const auto ledger = flag::flag_discrepancies(datum, p, d);
  const auto verdict = flag::is_klt_flag(datum, p, d);
  if (o.json) {
    Json dj;
    for (int a : p.complement) dj[simple_root_name(a)] = json_io::to_json(d.at(a));
    Json j;
    j["root_system"] = datum.name();
    j["I"] = levi_json(p.levi);
    j["d"] = dj.is_null() ? Json::object() : std::move(dj);
    j["word"] = to_string(ledger.word);
    j["ledger"] = json_io::bs_ledger_to_json(datum, ledger);
    j["min_discrepancy"] =
        ledger.entries.empty() ? Json(nullptr) : json_io::to_json(ledger.min_discrepancy());
    j["klt"] = verdict.klt;
    if (verdict.witness) {
      Json w;
      w["beta"] = int_json(datum.positive_roots()[verdict.witness->beta]);
      w["pairing"] = json_io::to_json(verdict.witness->pairing);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    out << json_io::dump(j);
    return kOk;
  }
  std::vector<std::string> ds;
  for (int a : p.complement) ds.push_back(simple_root_name(a) + "=" + to_string(d.at(a)));
  out << "root system " << datum.name() << ", I = " << levi_text(p.levi) << ", d: "
      << (ds.empty() ? "-" : join(ds, " ")) << '\n';
  out << "word " << to_string(ledger.word) << '\n';
  out << "divisor  beta                discrepancy  exceptional\n";
  for (const auto& e : ledger.entries) {
    char line[160];
    std::snprintf(line, sizeof line, "%-7s  %-18s  %-11s  %s\n", e.divisor.c_str(),
                  root_label(datum.positive_roots()[e.beta]).c_str(),
                  to_string(e.discrepancy).c_str(), e.exceptional ? "yes" : "no");
    out << line;
  }
  if (!ledger.entries.empty()) {
    out << "min discrepancy: " << to_string(ledger.min_discrepancy()) << '\n';
  }
  out << "verdict: " << (verdict.klt ? "klt" : "not klt") << '\n';
  if (verdict.witness) {
    out << "witness: beta = " << root_label(datum.positive_roots()[verdict.witness->beta])
        << ", pairing " << to_string(verdict.witness->pairing) << '\n';
  }
  return kOk;
}

void print_resolution(const toric::Resolution& res, std::ostream& out) {
  out << "resolved fan, rank " << res.fan.rank << '\n';
  out << "rays:\n";
  for (std::size_t i = 0; i < res.fan.rays.size(); ++i) {
    out << "  " << i << "  " << toric::ray_label(res.fan.rays[i]) << '\n';
  }
  out << "cones:\n";
  for (std::size_t c = 0; c < res.fan.cones.size(); ++c) {
    std::vector<std::string> ids;
    for (auto r : res.fan.cones[c]) ids.push_back(std::to_string(r));
    out << "  " << c << "  [" << join(ids, ",") << "]  from input cone "
        << res.cone_origin[c] << '\n';
  }
  out << "new rays:";
  if (res.provenance.empty()) out << " none";
  out << '\n';
  for (const auto& p : res.provenance) {
    out << "  " << p.ray << "  " << toric::ray_label(res.fan.rays[p.ray]) << "  input cone "
        << p.source_cone << "  (" << p.reason << ")\n";
  }
}

int cmd_resolve_fan(const Options& o, std::ostream& out) {
  const auto input = json_io::fan_from_json(json_io::parse(read_file(o.file)));
  const toric::Resolution res = toric::resolve_fan(input.fan);
  std::optional<toric::ToricLedger> ledger;
  if (input.d) ledger = toric::toric_discrepancies(input.fan, res, *input.d);
  // Multiplicity of each input cone; 1 means smooth, 0 marks a non-simplicial cone.
  std::vector<std::int64_t> mult;
  for (const auto& c : input.fan.cones) {
    mult.push_back(toric::is_simplicial(input.fan, c)
                       ? toric::multiplicity(toric::generators(input.fan, c))
                       : 0);
  }
  if (o.json) {
    Json j = json_io::resolution_to_json(res);
    Json mj = Json::array();
    for (auto m : mult) mj.push_back(m == 0 ? Json(nullptr) : Json(m));
    j["input_multiplicities"] = std::move(mj);
    if (ledger) {
      j["ledger"] = json_io::toric_ledger_to_json(*ledger);
      j["strictly_effective"] = ledger->strictly_effective;
    }
    out << json_io::dump(j);
    return kOk;
  }
  out << "input cones:\n";
  for (std::size_t c = 0; c < mult.size(); ++c) {
    std::vector<std::string> ids;
    for (auto r : input.fan.cones[c]) ids.push_back(std::to_string(r));
    out << "  " << c << "  [" << join(ids, ",") << "]  "
        << (mult[c] == 0 ? std::string("non-simplicial")
                         : "multiplicity " + std::to_string(mult[c]) +
                               (mult[c] == 1 ? " (smooth)" : " (singular)"))
        << '\n';
  }
  print_resolution(res, out);
  if (ledger) {
    out << "discrepancies:";
    if (ledger->entries.empty()) out << " none";
    out << '\n';
    for (const auto& e : ledger->entries) {
      out << "  " << e.divisor << "  " << toric::ray_label(e.ray) << "  "
          << to_string(e.discrepancy) << '\n';
    }
    out << "-K-D strictly effective: " << (ledger->strictly_effective ? "yes" : "no") << '\n';
  }
  return kOk;
}

std::string placement_name(horo::ColorPlacement p) {
  switch (p) {
    case horo::ColorPlacement::kUnused: return "unused";
    case horo::ColorPlacement::kOnRay: return "on-ray";
    case horo::ColorPlacement::kEdge: return "edge";
    case horo::ColorPlacement::kInterior: return "interior";
  }
  return "?";
}

// Toroidal resolution alone; works for interior colors, which have no ledger.
int print_toroidal(const horo::HorosphericalPair& pair, bool json, std::ostream& out) {
  horo::validate_pair(pair);
  const auto tr = horo::toroidal_resolution(pair);
  if (json) {
    Json cj = Json::array();
    for (const auto& c : tr.colors) {
      Json e;
      e["alpha"] = simple_root_name(c.alpha);
      e["placement"] = placement_name(c.placement);
      e["ray"] = c.ray ? Json(*c.ray) : Json(nullptr);
      cj.push_back(std::move(e));
    }
    Json j = json_io::resolution_to_json(tr.resolved);
    j["colors"] = std::move(cj);
    out << json_io::dump(j);
    return kOk;
  }
  out << "root system " << pair.datum.name() << ", I = " << levi_text(pair.parab.levi)
      << ", lattice rank " << pair.colored_fan.fan.rank << '\n';
  out << "colors:";
  if (tr.colors.empty()) out << " none";
  out << '\n';
  for (const auto& c : tr.colors) {
    out << "  " << simple_root_name(c.alpha) << "  " << placement_name(c.placement);
    if (c.ray) out << "  ray " << *c.ray << ' ' << toric::ray_label(tr.resolved.fan.rays[*c.ray]);
    out << '\n';
  }
  print_resolution(tr.resolved, out);
  bool smooth = true;
  for (const auto& cone : tr.resolved.fan.cones) {
    smooth = smooth && toric::is_smooth_cone(tr.resolved.fan, cone);
  }
  out << "all cones smooth: " << (smooth ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_klt_horo(const Options& o, std::ostream& out) {
  const horo::HorosphericalPair pair =
      json_io::pair_from_json(json_io::parse(read_file(o.file)));
  if (o.resolution_only) return print_toroidal(pair, o.json, out);
  const horo::HoroVerdict v = horo::is_klt_horospherical(pair);
  const int status = v.consistency_failure ? kFailure : kOk;
  const horo::Anticanonical anti = horo::anticanonical_horospherical(pair);
  if (o.json) {
    Json j = json_io::horo_verdict_to_json(pair.datum, v);
    Json aj;
    Json rays = Json::array();
    for (const auto& c : anti.ray_coefficients) rays.push_back(json_io::to_json(c));
    aj["rays"] = std::move(rays);
    Json fj = Json::object();
    for (const auto& [a, c] : anti.flag_part) fj["D_" + simple_root_name(a)] = json_io::to_json(c);
    aj["colors"] = std::move(fj);
    j["anticanonical"] = std::move(aj);
    out << json_io::dump(j);
    return status;
  }
  const auto& datum = pair.datum;
  out << "root system " << datum.name() << ", I = " << levi_text(pair.parab.levi)
      << ", lattice rank " << pair.colored_fan.fan.rank << '\n';
  std::vector<std::string> anti_terms;
  for (std::size_t i = 0; i < anti.ray_coefficients.size(); ++i) {
    anti_terms.push_back(to_string(anti.ray_coefficients[i]) + " X" + std::to_string(i + 1));
  }
  for (const auto& [a, c] : anti.flag_part) {
    anti_terms.push_back(to_string(c) + " D_" + simple_root_name(a));
  }
  out << "-K = " << (anti_terms.empty() ? "0" : join(anti_terms, " + ")) << '\n';
  print_resolution(v.ledger.resolution.resolved, out);
  out << "ledger:\n";
  for (const auto& e : v.ledger.ledger.entries) {
    const std::string where = e.beta ? root_label(datum.positive_roots()[*e.beta])
                                     : toric::ray_label(e.ray);
    char line[200];
    std::snprintf(line, sizeof line, "  %-10s %-22s %-18s %s\n", e.divisor.c_str(),
                  horo::entry_kind_name(e.kind).c_str(), where.c_str(),
                  to_string(e.discrepancy).c_str());
    out << line;
  }
  out << "ledger min: " << (v.ledger_min ? to_string(*v.ledger_min) : "none (empty ledger)")
      << '\n';
  out << "floor(D) = 0: " << (v.floor_is_zero ? "yes" : "no") << '\n';
  out << "-K-D strictly effective: " << (v.ledger.strictly_effective ? "yes" : "no") << '\n';
  out << "verdict: " << (v.klt ? "klt" : "not klt") << '\n';
  out << "consistency: " << (v.consistency_failure ? "FAILURE" : "ok") << '\n';
  return status;
}

int cmd_verify(const Options& o, std::ostream& out) {
  oracle::SweepOptions opts;
  if (o.types.empty()) {
    opts.types = oracle::sweep_types(o.max_rank);
  } else {
    for (const auto& t : o.types) {
      const auto spec = RootSystemSpec::parse(t);
      if (spec.components.size() != 1) {
        throw Error(ErrorCode::kInvalidArgument, "verify takes irreducible types, got " + t);
      }
      cartan_matrix(spec);
      opts.types.push_back(spec.components.front());
    }
  }
  opts.words = !o.no_words;
  opts.klt = !o.no_klt;
  opts.threads = o.threads;
  const auto report = oracle::run_sweep(opts);
  if (o.json) {
    out << json_io::dump(json_io::sweep_to_json(report));
  } else {
    out << oracle::format_table(report, o.timing);
  }
  return report.passed() ? kOk : kFailure;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const Weight w = parse_weight(datum, o.weight);
  std::vector<std::size_t> which;
  if (o.coroot.empty()) {
    for (std::size_t i = 0; i < datum.positive_roots().size(); ++i) which.push_back(i);
  } else {
    which.push_back(positive_root_of(datum, o.coroot));
  }
  if (o.json) {
    Json rows = Json::array();
    for (auto b : which) {
      Json r;
      r["beta"] = int_json(datum.positive_roots()[b]);
      r["coroot"] = int_json(datum.positive_coroots()[b]);
      r["pairing"] = json_io::to_json(pairing(datum, w, datum.positive_coroots()[b]));
      rows.push_back(std::move(r));
    }
    Json j;
    j["root_system"] = datum.name();
    j["weight"] = weight_json(w);
    j["pairings"] = std::move(rows);
    out << json_io::dump(j);
    return kOk;
  }
  out << "root system " << datum.name() << ", lambda = " << weight_label(w, "w") << '\n';
  for (auto b : which) {
    char line[200];
    std::snprintf(line, sizeof line, "  <lambda, (%s)^vee> = %s\n",
                  root_label(datum.positive_roots()[b]).c_str(),
                  to_string(pairing(datum, w, datum.positive_coroots()[b])).c_str());
    out << line;
  }
  return kOk;
}

int cmd_weyl(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const WeylWord word = parse_weyl_word(o.word, datum.rank());
  const auto inversions = inversion_set(datum, word);
  std::optional<Weight> weight;
  std::optional<IntVec> root;
  if (!o.weight.empty()) weight = weyl_apply(datum, word, parse_weight(datum, o.weight));
  if (!o.root.empty()) root = weyl_apply_root(datum, word, parse_root_vector(datum, o.root));
  if (o.json) {
    Json inv = Json::array();
    for (auto b : inversions) inv.push_back(int_json(datum.positive_roots()[b]));
    Json j;
    j["root_system"] = datum.name();
    j["word"] = to_string(word);
    j["inversion_set"] = std::move(inv);
    if (weight) j["weight_image"] = weight_json(*weight);
    if (root) j["root_image"] = int_json(*root);
    out << json_io::dump(j);
    return kOk;
  }
  std::vector<std::string> labels;
  for (auto b : inversions) labels.push_back(root_label(datum.positive_roots()[b]));
  out << "root system " << datum.name() << ", word "
      << (word.letters.empty() ? "e" : to_string(word)) << ", length " << word.length() << '\n';
  out << "inversion set: {" << join(labels, ", ") << "}\n";
  if (weight) {
    const Weight in_roots = datum.to_basis(*weight, Basis::kSimpleRoot);
    out << "w(" << o.weight << ") = " << weight_label(*weight, "w") << "  ("
        << weight_label(in_roots, "a") << ")\n";
  }
  if (root) out << "w(" << o.root << ") = " << signed_label(*root) << '\n';
  return kOk;
}

int cmd_pl_function(const Options& o, std::ostream& out) {
  const auto input = json_io::fan_from_json(json_io::parse(read_file(o.file)));
  RatVec values;
  for (const auto& v : o.values) values.push_back(parse_rational(v));
  if (values.size() != input.fan.rays.size()) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(input.fan.rays.size()) +
                                                 " ray values, got " + std::to_string(values.size()));
  }
  const toric::PLDivisor psi = toric::pl_function(input.fan, values);
  std::vector<std::pair<IntVec, std::optional<Rational>>> points;
  for (const auto& a : o.at) {
    const IntVec pt = parse_point(a);
    if (static_cast<int>(pt.size()) != input.fan.rank) {
      throw Error(ErrorCode::kDimensionMismatch, "point " + a + " has the wrong rank");
    }
    points.emplace_back(pt, toric::evaluate(input.fan, psi, pt));
  }
  if (o.json) {
    Json fs = Json::array();
    for (const auto& f : psi.functionals) {
      Json row = Json::array();
      for (const auto& c : f) row.push_back(json_io::to_json(c));
      fs.push_back(std::move(row));
    }
    Json pts = Json::array();
    for (const auto& [pt, val] : points) {
      Json r;
      r["point"] = int_json(pt);
      r["value"] = val ? json_io::to_json(*val) : Json(nullptr);
      pts.push_back(std::move(r));
    }
    Json j;
    j["functionals"] = std::move(fs);
    j["evaluations"] = std::move(pts);
    out << json_io::dump(j);
    return kOk;
  }
  out << "piecewise linear function, rank " << input.fan.rank << '\n';
  for (std::size_t c = 0; c < psi.functionals.size(); ++c) {
    const Weight f(Basis::kSimpleRoot, psi.functionals[c]);
    out << "  cone " << c << ":  psi = " << weight_label(f, "x") << '\n';
  }
  for (const auto& [pt, val] : points) {
    out << "  psi" << toric::ray_label(pt) << " = "
        << (val ? to_string(*val) : std::string("outside the support")) << '\n';
  }
  return kOk;
}

int cmd_inequality(const Options& o, std::ostream& out) {
  const RootDatum datum = RootDatum::build(RootSystemSpec::parse(o.type));
  const ParabolicData p = parabolic(datum, parse_levi(datum, o.levi));
  const auto c = oracle::check_root_inequality(datum, p);
  const bool ok = c.inequality_holds && c.reformulation_agrees && c.longest_element_route_agrees &&
                  oracle::verify_equality_characterization(datum, p) &&
                  oracle::verify_levi_longest_identity(datum, p);
  if (o.json) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      const auto b = p.non_levi_positive_roots[k];
      Json r;
      r["beta"] = int_json(datum.positive_roots()[b]);
      r["value"] = json_io::to_json(c.values[k]);
      r["w0_levi_beta"] = int_json(weyl_apply_root(datum, p.w0_levi_word, datum.positive_roots()[b]));
      rows.push_back(std::move(r));
    }
    Json j;
    j["root_system"] = datum.name();
    j["I"] = levi_json(p.levi);
    j["values"] = std::move(rows);
    j["min"] = c.values.empty() ? Json(nullptr) : json_io::to_json(c.min_value);
    j["witness_count"] = c.witnesses.size();
    j["passed"] = ok;
    out << json_io::dump(j);
    return ok ? kOk : kFailure;
  }
  out << "root system " << datum.name() << ", I = " << levi_text(p.levi) << '\n';
  out << "value = <2rho^P - rho - sum_{S\\I} w_alpha, beta^vee>\n";
  out << "  beta                value  w0_I(beta)\n";
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    const auto b = p.non_levi_positive_roots[k];
    char line[200];
    std::snprintf(line, sizeof line, "  %-18s  %5s  %s%s\n",
                  root_label(datum.positive_roots()[b]).c_str(), to_string(c.values[k]).c_str(),
                  signed_label(weyl_apply_root(datum, p.w0_levi_word, datum.positive_roots()[b])).c_str(),
                  c.values[k] == 0 ? "  (witness)" : "");
    out << line;
  }
  out << "checks: " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kFailure;
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotQCartier:
    case ErrorCode::kUnsupported:
    case ErrorCode::kRankCapExceeded:
      return kFailure;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrepancy and klt calculator for flag and horospherical pairs.",
               "kltcalc"};
  app.footer(kNamingNote);
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON instead of text");
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", o.type, "Root system, e.g. A2, B2xA1, G2")->required();
  };
  auto add_levi = [&](CLI::App* sub) {
    sub->add_option("-I,--I", o.levi, "Simple roots of the Levi, e.g. a1,a3")->delimiter(',');
  };

  auto* roots = app.add_subcommand("roots", "Print the positive roots and coroots");
  add_type(roots);
  add_json(roots);

  auto* parab = app.add_subcommand("parabolic", "Print R+_I, 2rho^P and the w0P word");
  add_type(parab);
  add_levi(parab);
  add_json(parab);

  parab->add_option("--character", o.character,
                    "P-character whose Schubert divisor to print, e.g. 3w2");

  auto* bs = app.add_subcommand("bs", "Print the beta sequence and -K coefficients");
  add_type(bs);
  add_levi(bs);
  bs->add_option("--word", o.word, "Reduced word of the coset element, e.g. s2,s1");
  bs->add_option("--pullback", o.pullback, "Also pull back a P-character, e.g. 3w2");
  add_json(bs);

  auto* pair_cmd = app.add_subcommand("pairing", "Evaluate <lambda, beta^vee>");
  add_type(pair_cmd);
  pair_cmd->add_option("--weight", o.weight, "Weight, e.g. -w1+3/2w2, rho, a1+a2")->required();
  pair_cmd->add_option("--coroot", o.coroot,
                       "Positive root beta, e.g. a1+a2; all positive roots if omitted");
  add_json(pair_cmd);

  auto* weyl = app.add_subcommand("weyl", "Apply a Weyl word; print its inversion set");
  add_type(weyl);
  weyl->add_option("--word", o.word, "Word such as s2,s1; empty for the identity")->required();
  weyl->add_option("--weight", o.weight, "Weight to act on, e.g. w1");
  weyl->add_option("--root", o.root, "Root to act on, e.g. a2");
  add_json(weyl);

  auto* ineq = app.add_subcommand("inequality", "Per-root values of the parabolic root inequality");
  add_type(ineq);
  add_levi(ineq);
  add_json(ineq);

  auto* klt_flag = app.add_subcommand("klt-flag", "Discrepancy ledger and klt verdict on G/P");
  add_type(klt_flag);
  add_levi(klt_flag);
  klt_flag->add_option("--d", o.d, "Boundary coefficients, e.g. a2=1/2")->delimiter(',');
  add_json(klt_flag);

  auto* resolve = app.add_subcommand("resolve-fan", "Smooth subdivision of a fan JSON file");
  resolve->add_option("file", o.file, "Fan JSON {rank, rays, cones, d?}")->required();
  add_json(resolve);

  auto* pl = app.add_subcommand("pl-function", "Solve for a piecewise linear function on a fan");
  pl->add_option("file", o.file, "Fan JSON {rank, rays, cones}")->required();
  pl->add_option("--values", o.values, "Value on each ray, e.g. 1,0,0,0")
      ->delimiter(',')
      ->required();
  pl->add_option("--at", o.at, "Lattice point to evaluate, e.g. 1,1 (repeatable)");
  add_json(pl);

  auto* horo_cmd = app.add_subcommand("klt-horo", "Composite ledger of a horospherical pair");
  horo_cmd->add_option("file", o.file, "HorosphericalPair JSON")->required();
  horo_cmd->add_flag("--resolution-only", o.resolution_only,
                     "Print the toroidal resolution and color placements only");
  add_json(horo_cmd);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive oracle sweep");
  verify->add_option("--max-rank", o.max_rank, "Largest rank swept")->check(CLI::Range(1, 8));
  verify->add_option("--types", o.types, "Explicit irreducible types, e.g. A3,G2")
      ->delimiter(',');
  verify->add_flag("--timing", o.timing, "Add per-cell milliseconds to the table");
  verify->add_flag("--no-words", o.no_words, "Skip reduced-word checks");
  verify->add_flag("--no-klt", o.no_klt, "Skip d-grid klt checks");
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.word_given = bs->count("--word") > 0;

  try {
    if (*roots) return cmd_roots(o, out);
    if (*parab) return cmd_parabolic(o, out);
    if (*bs) return cmd_bs(o, out);
    if (*pair_cmd) return cmd_pairing(o, out);
    if (*weyl) return cmd_weyl(o, out);
    if (*ineq) return cmd_inequality(o, out);
    if (*pl) return cmd_pl_function(o, out);
    if (*klt_flag) return cmd_klt_flag(o, out);
    if (*resolve) return cmd_resolve_fan(o, out);
    if (*horo_cmd) return cmd_klt_horo(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  }
  return kUsage;
}

}  // namespace kltcalc::cli
