#include "vincular/perm.hpp"

#include <algorithm>
#include <charconv>
#include <span>
#include <stdexcept>

namespace vincular {

namespace {

void require_distinct_positive(const std::vector<int>& letters) {
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1)
    throw std::invalid_argument("word letters must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated letter in word");
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  require_distinct_positive(letters_);
}

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i + 1)
      throw std::invalid_argument("letters do not form a permutation of [n]");
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  return Permutation(std::move(letters));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) return Permutation{};
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      std::string_view tok = comma == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
        throw std::invalid_argument("bad permutation letter '" + std::string(tok) + "'");
      letters.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("permutation digit string may only use digits 1-9");
      letters.push_back(c - '0');
    }
  }
  return Permutation(std::move(letters));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int x : letters_) out += static_cast<char>('0' + x);
    return out;
  }
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

IncreasingBinaryTree::IncreasingBinaryTree(int label, IncreasingBinaryTree left,
                                           IncreasingBinaryTree right)
    : node_(std::make_shared<const Node>(Node{label, std::move(left), std::move(right)})) {}

int IncreasingBinaryTree::label() const {
  if (is_leaf()) throw std::logic_error("leaf has no label");
  return node_->label;
}

const IncreasingBinaryTree& IncreasingBinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->left;
}

const IncreasingBinaryTree& IncreasingBinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->right;
}

bool operator==(const IncreasingBinaryTree& a, const IncreasingBinaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->label == b.node_->label && a.node_->left == b.node_->left &&
         a.node_->right == b.node_->right;
}

TreeShape::TreeShape(TreeShape left, TreeShape right)
    : node_(std::make_shared<const Node>(Node{std::move(left), std::move(right)})) {}

const TreeShape& TreeShape::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->left;
}

const TreeShape& TreeShape::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return node_->right;
}

int TreeShape::node_count() const {
  if (is_leaf()) return 0;
  return 1 + node_->left.node_count() + node_->right.node_count();
}

int TreeShape::compare(const TreeShape& a, const TreeShape& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (int c = compare(a.node_->left, b.node_->left)) return c;
  return compare(a.node_->right, b.node_->right);
}

Permutation reduce(const Word& w) {
  const auto& x = w.letters();
  const int n = static_cast<int>(x.size());
  std::vector<int> result(n);
  for (int i = 0; i < n; ++i) {
    int rank = 0;
    for (int j = 0; j < n; ++j) rank += x[j] <= x[i];
    result[i] = rank;
  }
  return Permutation(std::move(result));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> letters(p.letters().rbegin(), p.letters().rend());
  return Permutation(std::move(letters));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = n + 1 - p.letters()[i];
  return Permutation(std::move(letters));
}

namespace {

IncreasingBinaryTree build_tree(std::span<const int> letters) {
  if (letters.empty()) return {};
  auto min_it = std::min_element(letters.begin(), letters.end());
  auto pos = static_cast<size_t>(min_it - letters.begin());
  return IncreasingBinaryTree(*min_it, build_tree(letters.first(pos)),
                              build_tree(letters.subspan(pos + 1)));
}

void collect_in_order(const IncreasingBinaryTree& t, std::vector<int>& out) {
  if (t.is_leaf()) return;
  if (!t.left().is_leaf() && t.left().label() <= t.label())
    throw std::invalid_argument("tree labels do not increase away from the root");
  if (!t.right().is_leaf() && t.right().label() <= t.label())
    throw std::invalid_argument("tree labels do not increase away from the root");
  collect_in_order(t.left(), out);
  out.push_back(t.label());
  collect_in_order(t.right(), out);
}

}  // namespace

IncreasingBinaryTree to_increasing_tree(const Word& w) { return build_tree(w.letters()); }

Word from_increasing_tree(const IncreasingBinaryTree& t) {
  std::vector<int> letters;
  collect_in_order(t, letters);
  return Word(std::move(letters));
}

TreeShape unlabel(const IncreasingBinaryTree& t) {
  if (t.is_leaf()) return {};
  return TreeShape(unlabel(t.left()), unlabel(t.right()));
}

std::vector<int> left_to_right_minima(const Permutation& p) {
  std::vector<int> positions;
  int best = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (positions.empty() || p.at(i) < best) {
      positions.push_back(i);
      best = p.at(i);
    }
  }
  return positions;
}

}  // namespace vincular
