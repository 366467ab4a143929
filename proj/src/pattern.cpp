#include "vincular/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace vincular {

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<std::vector<int>> segments;
  std::vector<int> current;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-') {
      if (current.empty())
        throw std::invalid_argument("pattern parse error at position " +
                                    std::to_string(i + 1) + ": empty segment");
      segments.push_back(std::move(current));
      current.clear();
    } else if (c >= '1' && c <= '9') {
      current.push_back(c - '0');
    } else {
      throw std::invalid_argument("pattern parse error at position " + std::to_string(i + 1) +
                                  ": expected digit 1-9 or '-'");
    }
  }
  if (current.empty())
    throw std::invalid_argument("pattern parse error at position " +
                                std::to_string(text.size() + 1) + ": empty segment");
  segments.push_back(std::move(current));
  return VincularPattern(std::move(segments));
}

VincularPattern::VincularPattern(std::vector<std::vector<int>> segments)
    : segments_(std::move(segments)) {
  std::vector<int> flat;
  for (const auto& seg : segments_) {
    if (seg.empty()) throw std::invalid_argument("pattern segment may not be empty");
    flat.insert(flat.end(), seg.begin(), seg.end());
  }
  const int k = static_cast<int>(flat.size());
  if (k == 0) throw std::invalid_argument("pattern may not be empty");
  std::vector<int> seen(k + 1, 0);
  for (int x : flat) {
    if (x > k) throw std::invalid_argument("pattern digits must form a permutation of [k]");
    if (seen[x]++) throw std::invalid_argument("repeated digit in pattern");
  }
  underlying_ = Permutation(std::move(flat));
  for (size_t i = 0; i < segments_.size(); ++i) {
    if (i) str_ += '-';
    for (int x : segments_[i]) str_ += static_cast<char>('0' + x);
  }
}

std::vector<int> VincularPattern::type_signature() const {
  std::vector<int> sig;
  sig.reserve(segments_.size());
  for (const auto& seg : segments_) sig.push_back(static_cast<int>(seg.size()));
  return sig;
}

Permutation apply_symmetry(Symmetry g, const Permutation& p) {
  switch (g) {
    case Symmetry::kIdentity: return p;
    case Symmetry::kReverse: return reverse(p);
    case Symmetry::kComplement: return complement(p);
    case Symmetry::kReverseComplement: return reverse(complement(p));
  }
  throw std::logic_error("unknown symmetry");
}

VincularPattern apply_symmetry(Symmetry g, const VincularPattern& p) {
  const int k = p.letter_count();
  auto segs = p.segments();
  switch (g) {
    case Symmetry::kIdentity:
      return p;
    case Symmetry::kComplement:
      for (auto& seg : segs)
        for (int& x : seg) x = k + 1 - x;
      return VincularPattern(std::move(segs));
    case Symmetry::kReverse:
      std::reverse(segs.begin(), segs.end());
      for (auto& seg : segs) std::reverse(seg.begin(), seg.end());
      return VincularPattern(std::move(segs));
    case Symmetry::kReverseComplement:
      return apply_symmetry(Symmetry::kReverse, apply_symmetry(Symmetry::kComplement, p));
  }
  throw std::logic_error("unknown symmetry");
}

PatternSet::PatternSet(std::vector<VincularPattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  for (size_t i = 0; i < patterns_.size(); ++i) {
    if (i) str_ += ',';
    str_ += patterns_[i].str();
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<VincularPattern> patterns;
  if (text.empty()) return PatternSet{};
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view tok = comma == std::string_view::npos ? text.substr(start)
                                                           : text.substr(start, comma - start);
    patterns.push_back(VincularPattern::parse(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PatternSet(std::move(patterns));
}

namespace {

// Places segments left to right; start positions increase, segments never
// touch out of order. Collects, counts, or early-exits depending on mode.
class Matcher {
public:
  Matcher(const VincularPattern& pat, const std::vector<int>& host, int pinned_end)
      : segs_(pat.segments()),
        underlying_(pat.underlying().letters()),
        host_(host),
        pinned_end_(pinned_end) {
    suffix_len_.assign(segs_.size() + 1, 0);
    for (int t = static_cast<int>(segs_.size()) - 1; t >= 0; --t)
      suffix_len_[t] = suffix_len_[t + 1] + static_cast<int>(segs_[t].size());
  }

  bool exists() {
    search(0, 1);
    return found_;
  }

  long long count() {
    counting_ = true;
    search(0, 1);
    return count_;
  }

  std::vector<Occurrence> all() {
    std::vector<Occurrence> result;
    collect_ = &result;
    search(0, 1);
    return result;
  }

private:
  void search(size_t t, int min_start) {
    if (found_ && !collect_ && !counting_) return;
    if (t == segs_.size()) {
      at_leaf();
      return;
    }
    const int len = static_cast<int>(segs_[t].size());
    const int n = static_cast<int>(host_.size());
    if (t + 1 == segs_.size() && pinned_end_ > 0) {
      const int start = pinned_end_ - len + 1;
      if (start >= min_start) place(t, start);
      return;
    }
    const int max_start = n - suffix_len_[t] + 1;
    for (int start = min_start; start <= max_start; ++start) {
      place(t, start);
      if (found_ && !collect_ && !counting_) return;
    }
  }

  void place(size_t t, int start) {
    const int len = static_cast<int>(segs_[t].size());
    for (int j = 0; j < len; ++j) positions_.push_back(start + j);
    search(t + 1, start + len);
    positions_.resize(positions_.size() - len);
  }

  void at_leaf() {
    const size_t k = positions_.size();
    for (size_t a = 0; a + 1 < k; ++a) {
      const int ha = host_[positions_[a] - 1];
      for (size_t b = a + 1; b < k; ++b) {
        const int hb = host_[positions_[b] - 1];
        if ((ha < hb) != (underlying_[a] < underlying_[b])) return;
      }
    }
    found_ = true;
    ++count_;
    if (collect_) collect_->push_back(Occurrence{positions_});
  }

  const std::vector<std::vector<int>>& segs_;
  const std::vector<int>& underlying_;
  const std::vector<int>& host_;
  int pinned_end_;
  std::vector<int> suffix_len_;
  std::vector<int> positions_;
  std::vector<Occurrence>* collect_ = nullptr;
  bool counting_ = false;
  bool found_ = false;
  long long count_ = 0;
};

}  // namespace

std::vector<Occurrence> occurrences(const VincularPattern& p, const Permutation& host) {
  return Matcher(p, host.letters(), 0).all();
}

long long count_occurrences(const VincularPattern& p, const Permutation& host) {
  return Matcher(p, host.letters(), 0).count();
}

bool contains(const VincularPattern& p, const Permutation& host) {
  return Matcher(p, host.letters(), 0).exists();
}

bool avoids(const VincularPattern& p, const Permutation& host) { return !contains(p, host); }

bool avoids(const PatternSet& set, const Permutation& host) {
  for (const auto& p : set.patterns())
    if (contains(p, host)) return false;
  return true;
}

namespace detail {

bool occurrence_ending_at(const VincularPattern& p, const std::vector<int>& letters,
                          int end_pos) {
  return Matcher(p, letters, end_pos).exists();
}

}  // namespace detail

}  // namespace vincular
