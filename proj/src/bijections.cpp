#include "vincular/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <span>
#include <stdexcept>

#include "vincular/enumerate.hpp"

namespace vincular {

namespace {

const PatternSet& domain_set(const char* csv) {
  static std::vector<std::pair<std::string, PatternSet>>* cache =
      new std::vector<std::pair<std::string, PatternSet>>;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& [key, set] : *cache)
    if (key == csv) return set;
  cache->emplace_back(csv, PatternSet::parse(csv));
  return cache->back().second;
}

void require_avoids(const char* map_name, const char* csv, const Permutation& p) {
  if (!avoids(domain_set(csv), p))
    throw std::domain_error(std::string(map_name) + ": permutation must avoid {" + csv + "}");
}

size_t min_index(std::span<const int> w) {
  return static_cast<size_t>(std::min_element(w.begin(), w.end()) - w.begin());
}

// Factor at the minimum, right to left: the minimum of the remaining prefix
// and everything after it is one block. Blocks come out ordered by minima.
std::vector<std::vector<int>> min_factor_blocks(std::span<const int> w) {
  std::vector<std::vector<int>> blocks;
  while (!w.empty()) {
    const size_t i = min_index(w);
    blocks.emplace_back(w.begin() + i, w.end());
    std::sort(blocks.back().begin(), blocks.back().end());
    w = w.first(i);
  }
  std::reverse(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Composition Composition::parse(std::string_view text) {
  Composition c;
  if (text.empty()) return c;
  size_t start = 0;
  while (start <= text.size()) {
    size_t plus = text.find('+', start);
    std::string_view tok = plus == std::string_view::npos ? text.substr(start)
                                                          : text.substr(start, plus - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
      throw std::invalid_argument("bad composition part '" + std::string(tok) + "'");
    c.parts.push_back(value);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return c;
}

int Composition::total() const {
  int sum = 0;
  for (int p : parts) sum += p;
  return sum;
}

std::string Composition::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
  int depth = 0;
  for (char c : letters_) {
    if (c == 'u')
      ++depth;
    else if (c == 'd')
      --depth;
    else
      throw std::invalid_argument("Dyck word may only contain 'u' and 'd'");
    if (depth < 0) throw std::invalid_argument("Dyck word prefix has more d's than u's");
  }
  if (depth != 0) throw std::invalid_argument("Dyck word is not balanced");
}

std::string Subset::str() const {
  std::string out = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

SetPartition phi_123(const Permutation& p) {
  require_avoids("phi_123", "1-23", p);
  return SetPartition(min_factor_blocks(p.letters()));
}

Permutation phi_123_inverse(const SetPartition& part) {
  std::vector<int> out;
  const auto& blocks = part.blocks();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.push_back(it->front());
    for (auto r = it->rbegin(); r + 1 != it->rend(); ++r) out.push_back(*r);
  }
  return Permutation(std::move(out));
}

SetPartition phi_132(const Permutation& p) {
  require_avoids("phi_132", "1-32", p);
  return SetPartition(min_factor_blocks(p.letters()));
}

Permutation phi_132_inverse(const SetPartition& part) {
  std::vector<int> out;
  const auto& blocks = part.blocks();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return Permutation(std::move(out));
}

namespace {

std::vector<int> theta_word(std::span<const int> w) {
  if (w.empty()) return {};
  const size_t i = min_index(w);
  std::vector<int> out = theta_word(w.first(i));
  out.push_back(w[i]);
  for (auto it = w.rbegin(); it != w.rend() - i - 1; ++it) out.push_back(*it);
  return out;
}

}  // namespace

Permutation theta(const Permutation& p) {
  if (!avoids(domain_set("1-23"), p) && !avoids(domain_set("1-32"), p))
    throw std::domain_error("theta: permutation must avoid 1-23 or 1-32");
  return Permutation(theta_word(p.letters()));
}

DyckWord psi_dyck(const TreeShape& shape) {
  if (shape.is_leaf()) return DyckWord{};
  return DyckWord("u" + psi_dyck(shape.left()).str() + "d" + psi_dyck(shape.right()).str());
}

namespace {

TreeShape shape_from_dyck(std::string_view w) {
  if (w.empty()) return {};
  // w = u <left> d <right>; the matching d closes the first u.
  int depth = 0;
  size_t close = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    depth += w[i] == 'u' ? 1 : -1;
    if (depth == 0) {
      close = i;
      break;
    }
  }
  return TreeShape(shape_from_dyck(w.substr(1, close - 1)), shape_from_dyck(w.substr(close + 1)));
}

}  // namespace

TreeShape psi_dyck_inverse(const DyckWord& w) { return shape_from_dyck(w.str()); }

DyckWord psi_dyck_of_perm(const Permutation& p) {
  return psi_dyck(unlabel(to_increasing_tree(p.word())));
}

namespace {

// The left factor's letters all exceed the right factor's, so the right
// subtree takes the letters just above the root and the left subtree the rest.
void label_shape_in_order(const TreeShape& s, int lo, std::vector<int>& out) {
  if (s.is_leaf()) return;
  const int right_count = s.right().node_count();
  label_shape_in_order(s.left(), lo + 1 + right_count, out);
  out.push_back(lo);
  label_shape_in_order(s.right(), lo + 1, out);
}

}  // namespace

Permutation perm_from_dyck_213(const DyckWord& w) {
  std::vector<int> letters;
  label_shape_in_order(psi_dyck_inverse(w), 1, letters);
  return Permutation(std::move(letters));
}

Composition psi_comp(const Permutation& p) {
  require_avoids("psi_comp", "1-23,2-13", p);
  Composition c;
  std::span<const int> w = p.letters();
  std::vector<int> parts;
  while (!w.empty()) {
    const size_t i = min_index(w);
    parts.push_back(static_cast<int>(w.size() - i));
    w = w.first(i);
  }
  c.parts.assign(parts.rbegin(), parts.rend());
  return c;
}

Permutation psi_comp_inverse(const Composition& c) {
  std::vector<int> out;
  int remaining = c.total();
  for (int part : c.parts) {
    const int lo = remaining - part;  // this part holds letters lo+1 .. lo+part
    out.push_back(lo + 1);
    for (int v = lo + part; v >= lo + 2; --v) out.push_back(v);
    remaining = lo;
  }
  return Permutation(std::move(out));
}

Subset subset_map(const Permutation& p) {
  require_avoids("subset_map", "1-23,23-1", p);
  Subset s;
  s.n = p.size();
  if (p.empty()) return s;
  const size_t i = min_index(p.letters());
  s.elements.assign(p.letters().begin(), p.letters().begin() + i);
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

Permutation subset_map_inverse(const Subset& s) {
  if (s.n == 0 && s.elements.empty()) return Permutation{};
  std::vector<bool> chosen(s.n + 1, false);
  for (int x : s.elements) {
    if (x < 2 || x > s.n) throw std::invalid_argument("subset elements must lie in {2..n}");
    if (chosen[x]) throw std::invalid_argument("repeated subset element");
    chosen[x] = true;
  }
  std::vector<int> out;
  for (int v = s.n; v >= 2; --v)
    if (chosen[v]) out.push_back(v);
  out.push_back(1);
  for (int v = s.n; v >= 2; --v)
    if (!chosen[v]) out.push_back(v);
  return Permutation(std::move(out));
}

BinarySequence binstring_map(const Permutation& p) {
  require_avoids("binstring_map", "3-12,2-13", p);
  BinarySequence b;
  b.n = p.size();
  std::vector<int> w = p.letters();
  while (w.size() > 1) {
    const size_t i = min_index(w);
    if (i != 0 && i + 1 != w.size())
      throw std::logic_error("binstring_map: minimum not at an end inside the domain");
    b.bits += i == 0 ? '0' : '1';
    w.erase(w.begin() + i);
  }
  return b;
}

Permutation binstring_map_inverse(const BinarySequence& b) {
  if (static_cast<int>(b.bits.size()) != std::max(b.n - 1, 0))
    throw std::invalid_argument("bit string length must be n-1");
  std::vector<int> out;
  for (int lo = b.n; lo >= 1; --lo) {
    if (lo == b.n) {
      out.push_back(lo);
      continue;
    }
    const char bit = b.bits[lo - 1];
    if (bit == '0')
      out.insert(out.begin(), lo);
    else if (bit == '1')
      out.push_back(lo);
    else
      throw std::invalid_argument("bit string may only contain 0 and 1");
  }
  return Permutation(std::move(out));
}

namespace {

// Avoiders of {1-23, 21-3} with the largest letter second, and avoiders of
// {1-23, 13-2} with 1 second-to-last, listed lexicographically.
std::vector<Permutation> lambda_residual(const char* csv, int n, bool largest_second) {
  std::vector<Permutation> out;
  for (const auto& q : list_avoiders(domain_set(csv), n)) {
    if (largest_second ? q.at(2) == n : q.at(n - 1) == 1) out.push_back(q);
  }
  return out;
}

std::vector<int> shifted(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (int x : p.letters()) out.push_back(x + 1);
  return out;
}

}  // namespace

Permutation lambda_map(const Permutation& p) {
  require_avoids("lambda_map", "1-23,21-3", p);
  const int n = p.size();
  if (n <= 1) return p;
  if (p.at(1) == n) {
    std::vector<int> rest(p.letters().begin() + 1, p.letters().end());
    std::vector<int> out = shifted(lambda_map(Permutation(std::move(rest))));
    out.push_back(1);
    return Permutation(std::move(out));
  }
  // largest letter second: pair off with the images carrying 1 second-to-last
  const auto from = lambda_residual("1-23,21-3", n, true);
  const auto to = lambda_residual("1-23,13-2", n, false);
  if (from.size() != to.size()) throw std::logic_error("lambda_map: residual size mismatch");
  const auto it = std::find(from.begin(), from.end(), p);
  if (it == from.end()) throw std::logic_error("lambda_map: element missing from residual");
  return to[static_cast<size_t>(it - from.begin())];
}

Permutation lambda_map_inverse(const Permutation& p) {
  require_avoids("lambda_map_inverse", "1-23,13-2", p);
  const int n = p.size();
  if (n <= 1) return p;
  if (p.at(n) == 1) {
    std::vector<int> rest(p.letters().begin(), p.letters().end() - 1);
    for (int& x : rest) --x;
    const Permutation inner = lambda_map_inverse(Permutation(std::move(rest)));
    std::vector<int> out{n};
    out.insert(out.end(), inner.letters().begin(), inner.letters().end());
    return Permutation(std::move(out));
  }
  const auto from = lambda_residual("1-23,13-2", n, false);
  const auto to = lambda_residual("1-23,21-3", n, true);
  if (from.size() != to.size())
    throw std::logic_error("lambda_map_inverse: residual size mismatch");
  const auto it = std::find(from.begin(), from.end(), p);
  if (it == from.end()) throw std::logic_error("lambda_map_inverse: element missing from residual");
  return to[static_cast<size_t>(it - from.begin())];
}

SetPartition smp_map(const Permutation& p) {
  require_avoids("smp_map", "1-32,21-3", p);
  std::vector<std::vector<int>> blocks;
  int best = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (blocks.empty() || p.at(i) < best) {
      best = p.at(i);
      blocks.push_back({p.at(i)});
    } else {
      blocks.back().push_back(p.at(i));
    }
  }
  SetPartition part{std::move(blocks)};
  if (!partition_flags(part).strongly_monotone)
    throw std::logic_error("smp_map: image not strongly monotone");
  return part;
}

Permutation smp_map_inverse(const SetPartition& part) {
  if (!partition_flags(part).strongly_monotone)
    throw std::domain_error("smp_map_inverse: partition must be strongly monotone");
  std::vector<int> out;
  const auto& blocks = part.blocks();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return Permutation(std::move(out));
}

}  // namespace vincular
