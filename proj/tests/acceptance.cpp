// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are pinned here; oracles local to this file stay
// independent of the library paths they check.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vincular/bijections.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/sequences.hpp"
#include "vincular/tables.hpp"

using namespace vincular;

namespace {

struct Failures {
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    if (!ok) messages.push_back(what);
  }
};

template <typename T>
std::string show(const std::vector<T>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

// ---- criterion 1: worked-example fidelity ---------------------------------

void criterion_worked_examples(Failures& f) {
  const auto host = Permutation::parse("491273865");
  const auto occs = occurrences(VincularPattern::parse("1-23"), host);
  f.expect(occs.size() == 3, "occurrence count of 1-23 in 491273865");
  std::set<std::string> triples;
  for (const auto& occ : occs) {
    std::string letters;
    for (int pos : occ.positions) letters += static_cast<char>('0' + host.at(pos));
    triples.insert(letters);
  }
  f.expect(triples == std::set<std::string>{"127", "138", "238"}, "occurrence letter triples");

  f.expect(phi_123(Permutation::parse("649752183")).str() == "{1,3,8}/{2}/{4,5,7,9}/{6}",
           "phi_123(649752183)");
  f.expect(phi_132(Permutation::parse("645792138")).str() == "{1,3,8}/{2}/{4,5,7,9}/{6}",
           "phi_132(645792138)");
  f.expect(psi_comp(Permutation::parse("958764132")).str() == "1+4+1+3", "psi_comp(958764132)");
  f.expect(subset_map(Permutation::parse("421653")).str() == "{2,4}", "subset_map(421653)");
  f.expect(binstring_map(Permutation::parse("136542")).bits == "01011",
           "binstring_map(136542)");
}

// ---- criterion 2: single-pattern counts -----------------------------------

// Dyck words of length 2n, by direct recursive generation.
long long dyck_count(int n) { return (long long)oracles::all_dyck_words(n).size(); }

void criterion_single_patterns(Failures& f) {
  const std::vector<std::string> bell_patterns = {"1-23", "3-21", "12-3", "32-1",
                                                  "1-32", "3-12", "21-3", "23-1"};
  const std::vector<std::string> catalan_patterns = {"2-13", "2-31", "13-2", "31-2"};
  for (int n = 0; n <= 9; ++n) {
    const long long bell = oracles::partition_count(n);
    const long long catalan = dyck_count(n);
    for (const auto& text : bell_patterns)
      f.expect(count_avoiders(PatternSet::parse(text), n) == bell,
               "bell count for " + text + " at n=" + std::to_string(n));
    for (const auto& text : catalan_patterns)
      f.expect(count_avoiders(PatternSet::parse(text), n) == catalan,
               "catalan count for " + text + " at n=" + std::to_string(n));
  }
}

// ---- criterion 3: the pair table ------------------------------------------

void criterion_pair_table(Failures& f) {
  const auto checks = verify_pairs(9);
  f.expect(checks.size() == 66, "66 pair rows");
  for (const auto& check : checks) {
    f.expect(check.pass, "pair row " + check.sets.str() + " matches " + check.formula);
    if (check.formula == "zero")
      f.expect(check.n0 == 6, "zero row threshold for " + check.sets.str());
    else if (check.formula == "two_n_minus_2")
      f.expect(check.n0 == 2, "2(n-1) row threshold for " + check.sets.str());
    else
      f.expect(check.n0 <= 1, "threshold <= 1 for " + check.sets.str());
  }

  const auto report = classify(2, 9);
  f.expect(report.set_count() == 66, "66 pairs");
  f.expect(report.symmetry_class_count() == 21, "21 symmetry classes");
  f.expect(report.wilf_class_count() == 10, "10 Wilf classes");

  // the computed orbits are exactly the bundled classes
  std::set<std::set<std::string>> computed, bundled;
  for (const auto& members : report.orbits) {
    std::set<std::string> names;
    for (int i : members) names.insert(report.sets[i].str());
    computed.insert(names);
  }
  for (const auto& row : pairs_table()) {
    std::set<std::string> names;
    for (const auto& s : row.sets) names.insert(s.str());
    bundled.insert(names);
  }
  f.expect(computed == bundled, "pair orbits match the bundled table classes");
}

// ---- criterion 4: the multi-pattern panels --------------------------------

void criterion_multi_panels(Failures& f) {
  const std::vector<int> sets = {220, 495, 792, 924, 792, 495, 220, 66, 12, 1};
  const std::vector<int> classes = {55, 135, 198, 246, 198, 135, 55, 21, 3, 1};
  for (int k = 3; k <= 12; ++k) {
    const auto check = verify_multi(k, 8);
    f.expect(check.actual_sets == sets[k - 3],
             "set count at k=" + std::to_string(k) + " is " + std::to_string(check.actual_sets));
    f.expect(check.actual_classes == classes[k - 3],
             "class count at k=" + std::to_string(k) + " is " +
                 std::to_string(check.actual_classes));
    f.expect(check.pass, "panel k=" + std::to_string(k) + " multiplicities and thresholds");
    for (const auto& row : check.orbit_checks)
      f.expect(row.pass && row.n0 <= 6,
               "threshold for " + row.sets.str() + " (" + row.formula + ")");
  }
}

// ---- criterion 5: sequence identities -------------------------------------

void criterion_sequence_identities(Failures& f) {
  const std::vector<long long> a13 = {1,   1,    2,    4,     9,     22,   58,
                                      164, 496,  1601, 5502,  20075, 77531};
  const auto gf = a_series_from_gf(12);
  const auto cf = a_series_from_cf(12, 8);
  std::vector<long long> brute, enumerated;
  for (int n = 0; n <= 12; ++n) brute.push_back(strongly_monotone_count(n));
  const PatternSet class6 = PatternSet::parse("1-32,21-3");
  for (int n = 0; n <= 12; ++n) enumerated.push_back(count_avoiders(class6, n));
  f.expect(gf == a13, "a-series from the generating function: " + show(gf));
  f.expect(cf == a13, "a-series from the continued fraction: " + show(cf));
  f.expect(brute == a13, "strongly monotone brute force: " + show(brute));
  f.expect(enumerated == a13, "avoider counts for {1-32,21-3}: " + show(enumerated));

  const std::vector<long long> b10 = {1, 1, 2, 4, 9, 23, 65, 199, 654, 2296};
  const PatternSet class7 = PatternSet::parse("1-23,3-12");
  std::vector<long long> b_catalog, b_enumerated;
  for (int n = 0; n <= 9; ++n) {
    b_catalog.push_back(catalog_value("b_class7", n));
    b_enumerated.push_back(count_avoiders(class7, n));
  }
  f.expect(b_catalog == b10, "b recursion values: " + show(b_catalog));
  f.expect(b_enumerated == b10, "avoider counts for {1-23,3-12}: " + show(b_enumerated));
}

// ---- criterion 6: bijection property suite --------------------------------

template <typename Image, typename Map, typename Inverse>
void bijection_case(Failures& f, const std::string& name, const char* domain_csv, int n,
                    const std::set<Image>& codomain, Map&& map, Inverse&& inverse) {
  const auto domain = list_avoiders(PatternSet::parse(domain_csv), n);
  std::set<Image> image;
  bool roundtrips = true;
  for (const auto& p : domain) {
    const Image value = map(p);
    roundtrips = roundtrips && inverse(value) == p;
    image.insert(value);
  }
  const std::string at = " at n=" + std::to_string(n);
  f.expect(roundtrips, name + " inverse round-trip" + at);
  f.expect(image.size() == domain.size(), name + " injective" + at);
  f.expect(image == codomain, name + " image equals codomain" + at);
}

void criterion_bijections(Failures& f) {
  for (int n = 0; n <= 8; ++n) {
    std::set<SetPartition> all_parts;
    for (const auto& p : partitions(n)) all_parts.insert(p);

    bijection_case<SetPartition>(f, "phi_123", "1-23", n, all_parts,
                                 [](const auto& p) { return phi_123(p); },
                                 [](const auto& q) { return phi_123_inverse(q); });
    bijection_case<SetPartition>(f, "phi_132", "1-32", n, all_parts,
                                 [](const auto& p) { return phi_132(p); },
                                 [](const auto& q) { return phi_132_inverse(q); });

    std::set<Permutation> theta_target;
    for (const auto& q : list_avoiders(PatternSet::parse("1-32"), n)) theta_target.insert(q);
    bijection_case<Permutation>(f, "theta", "1-23", n, theta_target,
                                [](const auto& p) { return theta(p); },
                                [](const auto& q) { return theta(q); });

    std::set<DyckWord> dyck_target;
    for (const auto& w : oracles::all_dyck_words(n)) dyck_target.insert(DyckWord(w));
    bijection_case<DyckWord>(
        f, "psi_dyck", "2-13", n, dyck_target,
        [](const auto& p) { return psi_dyck_of_perm(p); },
        [](const auto& w) { return perm_from_dyck_213(w); });

    std::set<Composition> comps;
    {
      std::vector<int> parts;
      auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
          comps.insert(Composition{parts});
          return;
        }
        for (int p = 1; p <= rest; ++p) {
          parts.push_back(p);
          self(self, rest - p);
          parts.pop_back();
        }
      };
      rec(rec, n);
    }
    bijection_case<Composition>(f, "psi_comp", "1-23,2-13", n, comps,
                                [](const auto& p) { return psi_comp(p); },
                                [](const auto& q) { return psi_comp_inverse(q); });

    std::set<Subset> subsets;
    for (int mask = 0; mask < (1 << std::max(n - 1, 0)); ++mask) {
      Subset s;
      s.n = n;
      for (int v = 2; v <= n; ++v)
        if (mask & (1 << (v - 2))) s.elements.push_back(v);
      subsets.insert(s);
    }
    bijection_case<Subset>(f, "subset_map", "1-23,23-1", n, subsets,
                           [](const auto& p) { return subset_map(p); },
                           [](const auto& q) { return subset_map_inverse(q); });

    std::set<BinarySequence> bitstrings;
    for (int mask = 0; mask < (1 << std::max(n - 1, 0)); ++mask) {
      BinarySequence b;
      b.n = n;
      for (int i = 0; i < n - 1; ++i) b.bits += (mask >> i) & 1 ? '1' : '0';
      bitstrings.insert(b);
    }
    bijection_case<BinarySequence>(f, "binstring_map", "3-12,2-13", n, bitstrings,
                                   [](const auto& p) { return binstring_map(p); },
                                   [](const auto& q) { return binstring_map_inverse(q); });

    std::set<Permutation> lambda_target;
    for (const auto& q : list_avoiders(PatternSet::parse("1-23,13-2"), n))
      lambda_target.insert(q);
    bijection_case<Permutation>(f, "lambda_map", "1-23,21-3", n, lambda_target,
                                [](const auto& p) { return lambda_map(p); },
                                [](const auto& q) { return lambda_map_inverse(q); });

    std::set<SetPartition> strong;
    for (const auto& p : partitions(n))
      if (partition_flags(p).strongly_monotone) strong.insert(p);
    bijection_case<SetPartition>(f, "smp_map", "1-32,21-3", n, strong,
                                 [](const auto& p) { return smp_map(p); },
                                 [](const auto& q) { return smp_map_inverse(q); });
  }
}

// ---- criterion 7: engine self-consistency ---------------------------------

void criterion_engine(Failures& f) {
  std::mt19937 rng(20240601);
  int checked_sets = 0;
  while (checked_sets < 200) {
    std::vector<VincularPattern> chosen;
    for (const auto& p : pattern_universe())
      if (rng() % 3 == 0) chosen.push_back(p);
    const PatternSet set(std::move(chosen));
    ++checked_sets;
    for (int n = 0; n <= 7; ++n) {
      if (list_avoiders(set, n) != oracles::naive_avoiders(set, n)) {
        f.expect(false, "pruned enumeration differs from the naive filter for {" + set.str() +
                            "} at n=" + std::to_string(n));
        break;
      }
    }
  }

  bool equivariant = true;
  for (const auto& p : pattern_universe())
    for (const auto& host : oracles::all_perms(6))
      for (Symmetry g : kAllSymmetries)
        equivariant = equivariant &&
                      count_occurrences(p, host) ==
                          count_occurrences(apply_symmetry(g, p), apply_symmetry(g, host));
  f.expect(equivariant, "occurrence counts are symmetry-equivariant on S_6");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Failures&)>>> criteria = {
      {"1. worked-example fidelity", criterion_worked_examples},
      {"2. single-pattern counts against partition/Dyck oracles (n <= 9)",
       criterion_single_patterns},
      {"3. pair table, 66 rows and 21/10 classification (n <= 9)", criterion_pair_table},
      {"4. multi-pattern panels k = 3..12 (n <= 8)", criterion_multi_panels},
      {"5. sequence identities for the a- and b-recursions", criterion_sequence_identities},
      {"6. bijection property suite, nine maps (n <= 8)", criterion_bijections},
      {"7. engine self-consistency (200 random sets, equivariance on S_6)", criterion_engine},
  };

  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(f);
    } catch (const std::exception& e) {
      f.messages.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (f.messages.empty() ? "[PASS] " : "[FAIL] ") << name << " (" << seconds << "s)";
    std::cout << line.str() << "\n";
    for (const auto& message : f.messages) std::cout << "       " << message << "\n";
    failed += !f.messages.empty();
  }
  if (failed) {
    std::cout << failed << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
