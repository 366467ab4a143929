#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vincular {

/// A finite word over the positive integers with no repeated letters.
/// Positions are 1-indexed throughout the library.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int pos) const { return letters_[pos - 1]; }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<int> letters_;
};

/// A permutation of [n] in one-line notation; n = 0 is the empty permutation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);

  /// Parses one-line notation: a digit string for n <= 9 ("316452") or
  /// comma-separated letters ("10,3,1,..."). "" is the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int pos) const { return letters_[pos - 1]; }
  const std::vector<int>& letters() const { return letters_; }
  Word word() const { return Word(letters_); }

  /// One-line notation; digits for n <= 9, comma-separated otherwise.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> letters_;
};

/// Binary tree whose labels strictly increase away from the root; the empty
/// tree is a leaf. Immutable, copies share structure.
class IncreasingBinaryTree {
public:
  IncreasingBinaryTree() = default;  // leaf
  IncreasingBinaryTree(int label, IncreasingBinaryTree left, IncreasingBinaryTree right);

  bool is_leaf() const { return node_ == nullptr; }
  int label() const;
  const IncreasingBinaryTree& left() const;
  const IncreasingBinaryTree& right() const;

  friend bool operator==(const IncreasingBinaryTree& a, const IncreasingBinaryTree& b);

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct IncreasingBinaryTree::Node {
  int label;
  IncreasingBinaryTree left;
  IncreasingBinaryTree right;
};

/// The unlabeled form of a binary tree.
class TreeShape {
public:
  TreeShape() = default;  // leaf
  TreeShape(TreeShape left, TreeShape right);

  bool is_leaf() const { return node_ == nullptr; }
  const TreeShape& left() const;
  const TreeShape& right() const;
  int node_count() const;

  friend bool operator==(const TreeShape& a, const TreeShape& b) { return compare(a, b) == 0; }
  friend bool operator<(const TreeShape& a, const TreeShape& b) { return compare(a, b) < 0; }

private:
  struct Node;
  std::shared_ptr<const Node> node_;
  static int compare(const TreeShape& a, const TreeShape& b);
};

struct TreeShape::Node {
  TreeShape left;
  TreeShape right;
};

/// The permutation order-isomorphic to w: each letter becomes its rank.
Permutation reduce(const Word& w);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

/// Recursive factorization at the minimum: w = s m t becomes a node labeled m
/// with subtrees built from s and t. Node labels keep the original letters of
/// w, so subtree words can be read back without renormalization.
IncreasingBinaryTree to_increasing_tree(const Word& w);

/// In-order reading of the labels. Rejects trees whose labels do not
/// strictly increase away from the root.
Word from_increasing_tree(const IncreasingBinaryTree& t);

TreeShape unlabel(const IncreasingBinaryTree& t);

/// Positions i with p(i) < p(j) for all j < i, in increasing order.
std::vector<int> left_to_right_minima(const Permutation& p);

}  // namespace vincular
