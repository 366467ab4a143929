#include "vincular/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace vincular {

namespace {

PatternSet pair(const char* a, const char* b) {
  return PatternSet::parse(std::string(a) + "," + b);
}

}  // namespace

const std::vector<SingleRow>& singles_table() {
  static const std::vector<SingleRow>* table = [] {
    auto* out = new std::vector<SingleRow>;
    for (const char* text : {"1-23", "3-21", "12-3", "32-1", "1-32", "3-12", "21-3", "23-1"})
      out->push_back({VincularPattern::parse(text), "bell"});
    for (const char* text : {"2-13", "2-31", "13-2", "31-2"})
      out->push_back({VincularPattern::parse(text), "catalan"});
    std::sort(out->begin(), out->end(),
              [](const SingleRow& a, const SingleRow& b) { return a.pattern < b.pattern; });
    return out;
  }();
  return *table;
}

const std::vector<PairClassRow>& pairs_table() {
  static const std::vector<PairClassRow>* table = [] {
    auto* out = new std::vector<PairClassRow>;
    auto row = [&](const char* label, const char* formula,
                   std::vector<std::pair<const char*, const char*>> sets) {
      PairClassRow r;
      r.label = label;
      r.formula = formula;
      for (const auto& [a, b] : sets) r.sets.push_back(pair(a, b));
      out->push_back(std::move(r));
    };
    row("1", "zero", {{"1-23", "32-1"}, {"3-21", "12-3"}});
    row("2", "two_n_minus_2", {{"1-23", "3-21"}, {"32-1", "12-3"}});
    row("3", "n_choose_2_plus_1",
        {{"1-23", "2-31"}, {"3-21", "2-13"}, {"12-3", "31-2"}, {"32-1", "13-2"}});
    row("4a", "pow2_n_minus_1",
        {{"1-23", "2-13"}, {"3-21", "2-31"}, {"12-3", "13-2"}, {"32-1", "31-2"}});
    row("4b", "pow2_n_minus_1",
        {{"1-23", "23-1"}, {"3-21", "21-3"}, {"12-3", "3-12"}, {"32-1", "1-32"}});
    row("4c", "pow2_n_minus_1",
        {{"1-23", "31-2"}, {"3-21", "13-2"}, {"12-3", "2-31"}, {"32-1", "2-13"}});
    row("4d", "pow2_n_minus_1",
        {{"1-32", "2-13"}, {"3-12", "2-31"}, {"13-2", "21-3"}, {"23-1", "31-2"}});
    row("4e", "pow2_n_minus_1",
        {{"1-32", "2-31"}, {"3-12", "2-13"}, {"31-2", "21-3"}, {"23-1", "13-2"}});
    row("4f", "pow2_n_minus_1", {{"1-32", "3-12"}, {"23-1", "21-3"}});
    row("4g", "pow2_n_minus_1", {{"1-32", "23-1"}, {"3-12", "21-3"}});
    row("4h", "pow2_n_minus_1",
        {{"1-32", "31-2"}, {"3-12", "13-2"}, {"21-3", "2-31"}, {"23-1", "2-13"}});
    row("4i", "pow2_n_minus_1", {{"2-13", "2-31"}, {"31-2", "13-2"}});
    row("4j", "pow2_n_minus_1", {{"2-13", "13-2"}, {"2-31", "31-2"}});
    row("4k", "pow2_n_minus_1", {{"2-13", "31-2"}, {"2-31", "13-2"}});
    row("5a", "motzkin",
        {{"1-23", "13-2"}, {"3-21", "31-2"}, {"12-3", "2-13"}, {"32-1", "2-31"}});
    row("5b", "motzkin",
        {{"1-23", "21-3"}, {"3-21", "23-1"}, {"12-3", "1-32"}, {"32-1", "3-12"}});
    row("6", "a_strongly_monotone", {{"1-32", "21-3"}, {"3-12", "23-1"}});
    row("7", "b_class7",
        {{"1-23", "3-12"}, {"3-21", "1-32"}, {"23-1", "12-3"}, {"32-1", "21-3"}});
    row("8", "involutions",
        {{"1-23", "1-32"}, {"3-21", "3-12"}, {"21-3", "12-3"}, {"32-1", "23-1"}});
    row("9", "catalan",
        {{"1-32", "13-2"}, {"3-12", "31-2"}, {"21-3", "2-13"}, {"23-1", "2-31"}});
    row("10", "bessel", {{"1-23", "12-3"}, {"3-21", "32-1"}});
    int total = 0;
    for (const auto& r : *out) total += static_cast<int>(r.sets.size());
    if (total != 66 || out->size() != 21) throw std::logic_error("pairs table corrupt");
    return out;
  }();
  return *table;
}

const std::vector<MultiPanel>& multi_tables() {
  static const std::vector<MultiPanel>* table = [] {
    auto* out = new std::vector<MultiPanel>;
    auto panel = [&](int k, int sets, int classes,
                     std::vector<std::pair<const char*, std::map<int, int>>> rows) {
      MultiPanel p;
      p.k = k;
      p.set_count = sets;
      p.class_count = classes;
      for (auto& [formula, by_size] : rows) p.rows.push_back({formula, std::move(by_size)});
      out->push_back(std::move(p));
    };
    panel(3, 220, 55,
          {{"zero", {{4, 7}}},
           {"3", {{4, 1}}},
           {"n", {{4, 24}}},
           {"n_choose_2_plus_1", {{4, 2}}},
           {"fibonacci", {{4, 7}}},
           {"central_binomial", {{4, 1}}},
           {"pow2_n_minus_2_plus_1", {{4, 1}}},
           {"pow2_n_minus_1", {{4, 10}}},
           {"motzkin", {{4, 2}}}});
    panel(4, 495, 135,
          {{"zero", {{1, 1}, {2, 6}, {4, 30}}},
           {"2", {{1, 2}, {2, 5}, {4, 35}}},
           {"3", {{4, 1}}},
           {"n", {{4, 37}, {2, 1}}},
           {"n_choose_2_plus_1", {{4, 1}}},
           {"fibonacci", {{4, 9}, {2, 1}}},
           {"central_binomial", {{2, 1}}},
           {"pow2_n_minus_2_plus_1", {{2, 1}}},
           {"pow2_n_minus_1", {{4, 1}, {2, 3}}}});
    panel(5, 792, 198,
          {{"zero", {{4, 84}}},
           {"1", {{4, 16}}},
           {"2", {{4, 74}}},
           {"n", {{4, 20}}},
           {"fibonacci", {{4, 4}}}});
    panel(6, 924, 246,
          {{"zero", {{2, 17}, {4, 124}}},
           {"1", {{2, 4}, {4, 38}}},
           {"2", {{2, 7}, {4, 51}}},
           {"n", {{2, 1}, {4, 3}}},
           {"fibonacci", {{2, 1}}}});
    panel(7, 792, 198, {{"zero", {{4, 140}}}, {"1", {{4, 40}}}, {"2", {{4, 18}}}});
    panel(8, 495, 135,
          {{"zero", {{1, 2}, {2, 14}, {4, 94}}},
           {"1", {{2, 4}, {4, 18}}},
           {"2", {{1, 1}, {4, 2}}}});
    panel(9, 220, 55, {{"zero", {{4, 50}}}, {"1", {{4, 5}}}});
    panel(10, 66, 21, {{"zero", {{2, 8}, {4, 12}}}, {"1", {{2, 1}}}});
    panel(11, 12, 3, {{"zero", {{4, 3}}}});
    panel(12, 1, 1, {{"zero", {{1, 1}}}});
    return out;
  }();
  return *table;
}

long long formula_value(const std::string& name, int n) {
  if (name == "1") return 1;
  if (name == "2") return 2;
  if (name == "3") return 3;
  return catalog_value(name, n);
}

namespace {

int agreement_threshold(const CountSequence& seq, const std::string& formula) {
  int n0 = 0;
  for (int n = seq.n_max(); n >= 0; --n) {
    if (seq.counts[n] != formula_value(formula, n)) {
      n0 = n + 1;
      break;
    }
  }
  return n0;
}

FormulaCheck make_check(PatternSet sets, const std::string& formula, CountSequence seq) {
  FormulaCheck check;
  check.sets = std::move(sets);
  check.formula = formula;
  check.n0 = agreement_threshold(seq, formula);
  check.window_lo = check.n0;
  check.window_hi = seq.n_max();
  check.pass = check.n0 <= 6 && check.n0 <= seq.n_max();
  check.sequence = std::move(seq);
  return check;
}

}  // namespace

std::vector<FormulaCheck> verify_singles(int n_max) {
  std::vector<FormulaCheck> out;
  for (const auto& row : singles_table()) {
    PatternSet set({row.pattern});
    CountSequence seq = counting_sequence(set, n_max);
    out.push_back(make_check(std::move(set), row.formula, std::move(seq)));
  }
  return out;
}

std::vector<FormulaCheck> verify_pairs(int n_max, int threads) {
  // One row per pair, in table order.
  std::vector<std::pair<PatternSet, std::string>> rows;
  for (const auto& row : pairs_table())
    for (const auto& set : row.sets) rows.emplace_back(set, row.formula);

  ClassificationReport report = classify(2, n_max, threads);
  std::map<std::string, const CountSequence*> seq_of;
  for (size_t o = 0; o < report.orbits.size(); ++o)
    for (int i : report.orbits[o]) seq_of[report.sets[i].str()] = &report.orbit_sequences[o];

  std::vector<FormulaCheck> out;
  for (auto& [set, formula] : rows) {
    const auto it = seq_of.find(set.str());
    if (it == seq_of.end()) throw std::logic_error("pair missing from classification");
    out.push_back(make_check(set, formula, *it->second));
  }
  return out;
}

MultiPanelCheck verify_multi(int k, int n_max, int threads) {
  const auto& panels = multi_tables();
  const auto panel_it = std::find_if(panels.begin(), panels.end(),
                                     [&](const MultiPanel& p) { return p.k == k; });
  if (panel_it == panels.end())
    throw std::invalid_argument("no bundled panel for k=" + std::to_string(k));
  const MultiPanel& panel = *panel_it;

  MultiPanelCheck check;
  check.k = k;
  check.n_max = n_max;
  check.expected_sets = panel.set_count;
  check.expected_classes = panel.class_count;
  check.expected_families = static_cast<int>(panel.rows.size());
  for (const auto& row : panel.rows)
    check.expected_multiplicities[row.formula] = row.classes_by_orbit_size;

  ClassificationReport report = classify(k, n_max, threads);
  check.actual_sets = report.set_count();
  check.actual_classes = report.symmetry_class_count();

  bool all_orbits_pass = true;
  for (size_t o = 0; o < report.orbits.size(); ++o) {
    const auto& seq = report.orbit_sequences[o];
    // Smallest threshold among the panel's formulas wins; ties go to the
    // earlier table row.
    FormulaCheck best;
    bool matched = false;
    for (const auto& row : panel.rows) {
      FormulaCheck candidate =
          make_check(report.sets[report.orbits[o].front()], row.formula, seq);
      if (candidate.pass && (!matched || candidate.n0 < best.n0)) {
        best = candidate;
        matched = true;
      }
    }
    if (!matched) {
      best = make_check(report.sets[report.orbits[o].front()], "unmatched", seq);
      best.pass = false;
      all_orbits_pass = false;
    }
    check.actual_multiplicities[best.formula][static_cast<int>(report.orbits[o].size())] += 1;
    check.orbit_checks.push_back(std::move(best));
  }

  check.actual_families = static_cast<int>(check.actual_multiplicities.size());
  check.pass = all_orbits_pass && check.actual_sets == check.expected_sets &&
               check.actual_classes == check.expected_classes &&
               check.actual_multiplicities == check.expected_multiplicities;
  return check;
}

}  // namespace vincular
