#pragma once

#include <string>
#include <vector>

#include "vincular/pattern.hpp"
#include "vincular/perm.hpp"
#include "vincular/sequences.hpp"

namespace vincular {

/// |S_n(P)| for n = 0..n_max.
struct CountSequence {
  std::vector<long long> counts;

  int n_max() const { return static_cast<int>(counts.size()) - 1; }
  std::string str() const;

  friend bool operator==(const CountSequence&, const CountSequence&) = default;
};

/// Global enumeration bound: 12, lowered (never raised) by VINCULAR_MAX_N.
int max_n_bound();

/// Members of S_n(P) in lexicographic order, by prefix-pruned backtracking:
/// a partial word is abandoned as soon as its newest letter completes an
/// occurrence of any pattern in P.
std::vector<Permutation> list_avoiders(const PatternSet& set, int n);

long long count_avoiders(const PatternSet& set, int n);

CountSequence counting_sequence(const PatternSet& set, int n_max);

/// The twelve patterns with one dash and three letters, canonically ordered.
const std::vector<VincularPattern>& pattern_universe();

/// {g(P) : g in the rectangle symmetry group}, sorted; size 1, 2 or 4.
std::vector<PatternSet> orbit(const PatternSet& set);

struct WilfGroup {
  std::vector<int> orbit_ids;
  CountSequence sequence;
  std::vector<Identification> identified_as;
};

struct ClassificationReport {
  int k = 0;
  int n_max = 0;
  std::vector<PatternSet> sets;                // canonical order
  std::vector<std::vector<int>> orbits;        // indices into sets
  std::vector<CountSequence> orbit_sequences;  // parallel to orbits
  std::vector<WilfGroup> wilf_groups;

  int set_count() const { return static_cast<int>(sets.size()); }
  int symmetry_class_count() const { return static_cast<int>(orbits.size()); }
  int wilf_class_count() const { return static_cast<int>(wilf_groups.size()); }
};

/// Partitions the k-subsets of the pattern universe into symmetry classes and
/// groups them by counting sequence. Every member set is enumerated and
/// checked against its orbit mates. threads = 0 means all cores; the result
/// does not depend on the thread count.
ClassificationReport classify(int k, int n_max, int threads = 0);

/// The unique member of S_n(1-23, 3-21) ending with the adjacent pair n, 1;
/// n >= 2.
Permutation witness_perm(int n);

}  // namespace vincular
