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

#include "kltcalc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "kltcalc/error.hpp"

namespace kltcalc::oracle {

namespace {

IntVec unit(std::size_t n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

Weight sum_of_fundamentals(const RootDatum& datum, const std::vector<int>& ids) {
  Weight w = Weight::zero(Basis::kFundamentalWeight, datum.rank());
  for (int a : ids) w += datum.fundamental_weight(a);
  return w;
}

bool supported_in(const IntVec& root, const std::vector<int>& subset) {
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] != 0 && !std::binary_search(subset.begin(), subset.end(), static_cast<int>(i))) {
      return false;
    }
  }
  return true;
}

std::uint64_t count_rec(const RootDatum& datum, const IntVec& image, std::uint64_t cap,
                        std::map<IntVec, std::uint64_t>& memo) {
  const auto descents = left_descents(image);
  if (descents.empty()) return 1;
  if (auto it = memo.find(image); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int i : descents) {
    total += count_rec(datum, reflect_rho_image(datum, i, image), cap, memo);
    if (total >= cap) {
      total = cap;
      break;
    }
  }
  memo.emplace(image, total);
  return total;
}

void words_rec(const RootDatum& datum, const IntVec& image, WeylWord& prefix,
               std::vector<WeylWord>& out) {
  const auto descents = left_descents(image);
  if (descents.empty()) {
    out.push_back(prefix);
    return;
  }
  for (int i : descents) {
    prefix.letters.push_back(i);
    words_rec(datum, reflect_rho_image(datum, i, image), prefix, out);
    prefix.letters.pop_back();
  }
}

std::vector<Rational> sorted_discrepancies(const flag::BSLedger& ledger) {
  std::vector<Rational> out;
  for (const auto& e : ledger.entries) out.push_back(e.discrepancy);
  std::sort(out.begin(), out.end());
  return out;
}

std::string levi_name(const std::vector<int>& levi) {
  std::string out = "{";
  for (std::size_t i = 0; i < levi.size(); ++i) {
    if (i) out += ',';
    out += simple_root_name(levi[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<RootSystemComponent> sweep_types(int max_rank) {
  std::vector<RootSystemComponent> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

std::vector<std::vector<int>> proper_subsets(std::size_t rank) {
  std::vector<std::vector<int>> out;
  const std::uint32_t full = (1u << rank) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < rank; ++i) {
      if (mask & (1u << i)) s.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

InequalityCheck check_root_inequality(const RootDatum& datum, const ParabolicData& parab) {
  InequalityCheck check;
  const Weight direct = parab.two_rho_superP - datum.rho() -
                        sum_of_fundamentals(datum, parab.complement);
  const Weight levi_fund = sum_of_fundamentals(datum, parab.levi);
  const Weight reformulated =
      levi_fund - datum.to_basis(parab.levi_root_sum, Basis::kFundamentalWeight);
  bool first = true;
  for (auto b : parab.non_levi_positive_roots) {
    const IntVec& coroot = datum.positive_coroots()[b];
    const Rational v1 = pairing(datum, direct, coroot);
    const Rational v2 = pairing(datum, reformulated, coroot);
    const IntVec moved = weyl_apply_coroot(datum, parab.w0_levi_word, coroot);
    const Rational v3 = pairing(datum, levi_fund, moved);
    if (v1 < 0) check.inequality_holds = false;
    if (v1 != v2) check.reformulation_agrees = false;
    if (v1 != v3 || !is_positive(moved)) check.longest_element_route_agrees = false;
    if (first || v1 < check.min_value) check.min_value = v1;
    first = false;
    check.values.push_back(v1);
    if (v1 == 0) check.witnesses.push_back(b);
  }
  return check;
}

bool verify_levi_longest_identity(const RootDatum& datum, const ParabolicData& parab) {
  const Weight levi_fund = sum_of_fundamentals(datum, parab.levi);
  const Weight lhs = weyl_apply(datum, parab.w0_levi_word, levi_fund);
  const Weight rhs =
      levi_fund - datum.to_basis(parab.levi_root_sum, Basis::kFundamentalWeight);
  return lhs == rhs;
}

bool verify_equality_characterization(const RootDatum& datum, const ParabolicData& parab) {
  const Weight value_weight =
      sum_of_fundamentals(datum, parab.levi) -
      datum.to_basis(parab.levi_root_sum, Basis::kFundamentalWeight);
  bool any_witness = false;
  for (auto b : parab.non_levi_positive_roots) {
    const bool zero = pairing(datum, value_weight, datum.positive_coroots()[b]) == 0;
    const IntVec image =
        weyl_apply_root(datum, parab.w0_levi_word, datum.positive_roots()[b]);
    const bool in_complement = is_positive(image) && supported_in(image, parab.complement);
    if (zero != in_complement) return false;
    any_witness = any_witness || zero;
  }
  return parab.levi.size() == datum.rank() || any_witness;
}

std::uint64_t count_reduced_words(const RootDatum& datum, const IntVec& image,
                                  std::uint64_t cap) {
  std::map<IntVec, std::uint64_t> memo;
  return count_rec(datum, image, cap, memo);
}

std::vector<WeylWord> all_reduced_words(const RootDatum& datum, const IntVec& image) {
  std::vector<WeylWord> out;
  WeylWord prefix;
  words_rec(datum, image, prefix, out);
  return out;
}

std::vector<WeylWord> sample_reduced_words(const RootDatum& datum, const IntVec& image,
                                           std::size_t budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<WeylWord> found;
  const std::size_t max_attempts = 50 * budget + 50;
  for (std::size_t attempt = 0; attempt < max_attempts && found.size() < budget; ++attempt) {
    WeylWord word;
    IntVec cur = image;
    for (;;) {
      const auto descents = left_descents(cur);
      if (descents.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
      const int letter = descents[pick(rng)];
      word.letters.push_back(letter);
      cur = reflect_rho_image(datum, letter, std::move(cur));
    }
    found.insert(std::move(word));
  }
  return {found.begin(), found.end()};
}

WordCheck verify_beta_set_and_word_independence(const RootDatum& datum,
                                                const ParabolicData& parab,
                                                std::size_t word_budget,
                                                const flag::FlagBoundary& d) {
  WordCheck check;
  const IntVec image = rho_image(datum, parab.w0P_word);
  std::vector<WeylWord> words;
  if (word_budget == 0 ||
      count_reduced_words(datum, image, word_budget + 1) <= word_budget) {
    words = all_reduced_words(datum, image);
  } else {
    words = sample_reduced_words(datum, image, word_budget, 0x5eed0000u + datum.rank());
    check.exhaustive = false;
  }
  const std::set<std::size_t> expected(parab.non_levi_positive_roots.begin(),
                                       parab.non_levi_positive_roots.end());
  const auto reference =
      sorted_discrepancies(flag::flag_discrepancies(datum, parab, d, parab.w0P_word));
  for (const auto& word : words) {
    const auto ledger = flag::flag_discrepancies(datum, parab, d, word);
    const std::set<std::size_t> betas(ledger.betas.begin(), ledger.betas.end());
    if (betas != expected || betas.size() != ledger.betas.size()) check.beta_sets_match = false;
    if (sorted_discrepancies(ledger) != reference) check.multisets_agree = false;
    ++check.words_checked;
  }
  return check;
}

KltCheck verify_klt_criterion(const RootDatum& datum, const ParabolicData& parab,
                            const std::vector<Rational>& grid) {
  KltCheck check;
  const auto& comp = parab.complement;
  std::vector<std::size_t> idx(comp.size(), 0);
  for (;;) {
    flag::FlagBoundary d;
    bool all_zero = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      d.coefficients[comp[k]] = grid[idx[k]];
      if (grid[idx[k]] != 0) all_zero = false;
    }
    const auto verdict = flag::is_klt_flag(datum, parab, d);
    const Rational min = flag::flag_discrepancies(datum, parab, d).min_discrepancy();
    if (!verdict.klt || min <= -1 || (all_zero && min < 0)) check.holds = false;
    ++check.boundaries_checked;

    for (int alpha : comp) {
      flag::FlagBoundary edge = d;
      edge.coefficients[alpha] = 1;
      const auto v = flag::is_klt_flag(datum, parab, edge);
      const auto ledger = flag::flag_discrepancies(datum, parab, edge);
      const auto sharp = datum.root_index(
          weyl_apply_root(datum, parab.w0_levi_word, unit(datum.rank(), alpha)));
      bool attained = false;
      for (const auto& e : ledger.entries) {
        if (sharp && e.beta == *sharp && e.discrepancy == -1) attained = true;
      }
      if (v.klt || ledger.min_discrepancy() != -1 || !attained) check.holds = false;
      ++check.boundaries_checked;
    }

    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return check;
}

bool CellRecord::passed() const {
  return inequality && reformulation && longest_element_route && levi_identity &&
         equality_characterization && beta_sets && word_independence && klt_criterion;
}

std::size_t SweepReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellRecord& c) { return !c.passed(); }));
}

SweepReport run_sweep(const SweepOptions& options) {
  for (const auto& g : options.grid) {
    if (g < 0 || g >= 1) {
      throw Error(ErrorCode::kCoefficientOutOfRange, "grid value " + to_string(g));
    }
  }
  std::vector<RootDatum> data;
  struct Cell {
    std::size_t datum;
    std::vector<int> levi;
  };
  std::vector<Cell> cells;
  for (const auto& t : options.types) {
    RootSystemSpec spec;
    spec.components.push_back(t);
    data.push_back(RootDatum::build(spec));
    for (auto& levi : proper_subsets(data.back().rank())) {
      cells.push_back({data.size() - 1, std::move(levi)});
    }
  }

  SweepReport report;
  report.cells.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      const auto start = std::chrono::steady_clock::now();
      const RootDatum& datum = data[cells[k].datum];
      const ParabolicData parab = parabolic(datum, cells[k].levi);
      CellRecord rec;
      rec.type = datum.name();
      rec.levi = parab.levi;
      const auto ineq = check_root_inequality(datum, parab);
      rec.min_value = ineq.min_value;
      for (auto b : ineq.witnesses) rec.witnesses.push_back(datum.positive_roots()[b]);
      rec.inequality = ineq.inequality_holds;
      rec.reformulation = ineq.reformulation_agrees;
      rec.longest_element_route = ineq.longest_element_route_agrees;
      rec.levi_identity = verify_levi_longest_identity(datum, parab);
      rec.equality_characterization = verify_equality_characterization(datum, parab);
      rec.beta_sets = rec.word_independence = rec.klt_criterion = true;
      if (options.words) {
        flag::FlagBoundary half;
        for (int a : parab.complement) half.coefficients[a] = Rational(1, 2);
        const std::size_t budget =
            static_cast<int>(datum.rank()) <= options.exhaustive_word_rank ? 0
                                                                           : options.sampled_words;
        const auto wc = verify_beta_set_and_word_independence(datum, parab, budget, half);
        rec.beta_sets = wc.beta_sets_match;
        rec.word_independence = wc.multisets_agree;
        rec.words_checked = wc.words_checked;
        rec.words_exhaustive = wc.exhaustive;
      }
      if (options.klt) {
        const auto kc = verify_klt_criterion(datum, parab, options.grid);
        rec.klt_criterion = kc.holds;
        rec.boundaries_checked = kc.boundaries_checked;
      }
      rec.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
      report.cells[k] = std::move(rec);
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

SweepReport verify_root_inequality(const std::vector<RootSystemComponent>& types,
                                   int max_rank) {
  SweepOptions options;
  for (const auto& t : types) {
    if (t.rank <= max_rank) options.types.push_back(t);
  }
  options.words = false;
  options.klt = false;
  return run_sweep(options);
}

std::string format_table(const SweepReport& report, bool timing) {
  std::ostringstream os;
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  os << "type  I              min  witnesses  ineq  reform  route  levi  eqchar  betas  words      klt";
  if (timing) os << "      ms";
  os << '\n';
  for (const auto& c : report.cells) {
    std::string words = c.words_checked == 0 ? "-" : std::to_string(c.words_checked) +
                                                         (c.words_exhaustive ? " all" : " smp");
    std::string klt = c.boundaries_checked == 0 ? "-" : std::to_string(c.boundaries_checked);
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-14s %4s %10zu  %-4s  %-6s  %-5s  %-4s  %-6s  %-5s  %-9s  %s",
                  c.type.c_str(), levi_name(c.levi).c_str(), to_string(c.min_value).c_str(),
                  c.witnesses.size(), mark(c.inequality), mark(c.reformulation),
                  mark(c.longest_element_route), mark(c.levi_identity),
                  mark(c.equality_characterization),
                  mark(c.beta_sets && c.word_independence), words.c_str(),
                  (c.klt_criterion ? klt : "FAIL " + klt).c_str());
    os << line;
    if (timing) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "  %7.2f", c.millis);
      os << ms;
    }
    os << '\n';
  }
  os << report.cells.size() << " cells, " << report.failures() << " failures\n";
  return os.str();
}

}  // namespace kltcalc::oracle
