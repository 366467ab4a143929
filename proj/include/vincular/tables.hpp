#pragma once

#include <map>
#include <string>
#include <vector>

#include "vincular/enumerate.hpp"
#include "vincular/pattern.hpp"

namespace vincular {

// Bundled reference tables: the single-pattern counts, the 21 pair classes
// with their closed forms, and the expected class/multiplicity panels for
// every larger set size. Formula names are catalog names, plus the constants
// "1", "2" and "3" used only by the larger panels.

struct SingleRow {
  VincularPattern pattern;
  std::string formula;
};

const std::vector<SingleRow>& singles_table();

struct PairClassRow {
  std::string label;             // "1", "2", "3", "4a".."4k", "5a", "5b", "6".."10"
  std::vector<PatternSet> sets;  // the full symmetry class
  std::string formula;
};

const std::vector<PairClassRow>& pairs_table();

struct MultiRow {
  std::string formula;
  std::map<int, int> classes_by_orbit_size;  // orbit size -> number of classes
};

struct MultiPanel {
  int k = 0;
  int set_count = 0;
  int class_count = 0;
  std::vector<MultiRow> rows;
};

/// Panels for k = 3..12.
const std::vector<MultiPanel>& multi_tables();

/// Catalog value, or the constant for the names "1", "2", "3".
long long formula_value(const std::string& name, int n);

struct FormulaCheck {
  PatternSet sets;
  std::string formula;
  int n0 = 0;         // least n from which the sequence matches the formula
  int window_lo = 0;  // checked window [n0, n_max]
  int window_hi = 0;
  bool pass = false;  // requires n0 <= 6
  CountSequence sequence;
};

std::vector<FormulaCheck> verify_singles(int n_max);
std::vector<FormulaCheck> verify_pairs(int n_max, int threads = 0);

struct MultiPanelCheck {
  int k = 0;
  int n_max = 0;
  int expected_sets = 0;
  int actual_sets = 0;
  int expected_classes = 0;
  int actual_classes = 0;
  // Distinct cardinality formulas in the panel; the bundled tables count
  // Wilf classes this way (sequences may still differ below the thresholds).
  int expected_families = 0;
  int actual_families = 0;
  std::vector<FormulaCheck> orbit_checks;  // one per symmetry class
  std::map<std::string, std::map<int, int>> expected_multiplicities;
  std::map<std::string, std::map<int, int>> actual_multiplicities;
  bool pass = false;
};

/// Classifies the k-subsets, matches every symmetry class against the
/// panel's formulas and compares the multiplicity profile.
MultiPanelCheck verify_multi(int k, int n_max, int threads = 0);

}  // namespace vincular
