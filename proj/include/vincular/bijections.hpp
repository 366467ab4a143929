#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vincular/pattern.hpp"
#include "vincular/perm.hpp"
#include "vincular/sequences.hpp"

namespace vincular {

/// An ordered sum of positive parts. Serializes as "1+4+1+3".
struct Composition {
  std::vector<int> parts;

  static Composition parse(std::string_view text);
  int total() const;
  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// A balanced word over {u, d} in which no prefix has more d's than u's.
class DyckWord {
public:
  DyckWord() = default;
  explicit DyckWord(std::string letters);

  const std::string& str() const { return letters_; }
  int node_count() const { return static_cast<int>(letters_.size()) / 2; }

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

private:
  std::string letters_;
};

/// A {0,1} word of length n-1 attached to a host size n.
struct BinarySequence {
  int n = 0;
  std::string bits;

  friend auto operator<=>(const BinarySequence&, const BinarySequence&) = default;
};

/// A subset of {2, ..., n}. Serializes as "{2,4}".
struct Subset {
  int n = 0;
  std::vector<int> elements;

  std::string str() const;

  friend auto operator<=>(const Subset&, const Subset&) = default;
};

// Every map below checks its avoidance precondition and throws
// std::domain_error on violation; the inverses rebuild the unique preimage.

/// Avoiders of 1-23 to partitions of [n]: repeatedly factor at the minimum;
/// the minimum and everything right of it form a block.
SetPartition phi_123(const Permutation& p);
Permutation phi_123_inverse(const SetPartition& part);

/// Avoiders of 1-32 to partitions of [n]; same block extraction, the block
/// remainders are written ascending on the way back.
SetPartition phi_132(const Permutation& p);
Permutation phi_132_inverse(const SetPartition& part);

/// Swaps the classes of 1-23 and 1-32: factor at the minimum, keep the left
/// part recursively, reverse the right part. Involutive.
Permutation theta(const Permutation& p);

/// Shape to Dyck word: node -> u <left> d <right>.
DyckWord psi_dyck(const TreeShape& shape);
TreeShape psi_dyck_inverse(const DyckWord& w);

/// Dyck word of the tree shape of a permutation.
DyckWord psi_dyck_of_perm(const Permutation& p);

/// The unique avoider of 2-13 with the given tree shape: the minimum at the
/// root, the next smallest letters filling the left subtree.
Permutation perm_from_dyck_213(const DyckWord& w);

/// Avoiders of {1-23, 2-13} to compositions of n: part sizes of the
/// minimum-factorization, leftmost factor first.
Composition psi_comp(const Permutation& p);
Permutation psi_comp_inverse(const Composition& c);

/// Avoiders of {1-23, 23-1} to subsets of {2..n}: the letters left of 1.
Subset subset_map(const Permutation& p);
Permutation subset_map_inverse(const Subset& s);

/// Avoiders of {3-12, 2-13} to {0,1}^(n-1): at each factorization level the
/// minimum is at an end; emit 1 when it is at the right end, 0 at the left.
BinarySequence binstring_map(const Permutation& p);
Permutation binstring_map_inverse(const BinarySequence& b);

/// Avoiders of {1-23, 21-3} to avoiders of {1-23, 13-2}. The largest letter
/// sits at position 1 or 2. When it leads, strip it, map the rest, shift up
/// and append 1 (the image then ends in 1; inversely, images ending in 1 are
/// peeled the same way). When it sits second, the two residual families
/// (largest letter second / letter 1 second-to-last) are paired off in
/// lexicographic order, which the inverse reproduces.
Permutation lambda_map(const Permutation& p);
Permutation lambda_map_inverse(const Permutation& p);

/// Avoiders of {1-32, 21-3} to strongly monotone partitions: each
/// left-to-right minimum and the run after it form a block.
SetPartition smp_map(const Permutation& p);
Permutation smp_map_inverse(const SetPartition& part);

}  // namespace vincular
