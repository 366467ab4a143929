#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/perm.hpp"

namespace vincular {

/// The symmetries of a rectangle acting on permutations and patterns.
enum class Symmetry { kIdentity, kReverse, kComplement, kReverseComplement };

inline constexpr std::array<Symmetry, 4> kAllSymmetries = {
    Symmetry::kIdentity, Symmetry::kReverse, Symmetry::kComplement,
    Symmetry::kReverseComplement};

/// A dash pattern: segments of letters that must sit at adjacent host
/// positions, with arbitrary (possibly empty) gaps between segments.
///
/// Text grammar (exact): pattern := segment ("-" segment)*, segment := [1-9]+,
/// and the concatenated digits must form a permutation of [k].
class VincularPattern {
public:
  static VincularPattern parse(std::string_view text);
  explicit VincularPattern(std::vector<std::vector<int>> segments);

  const std::vector<std::vector<int>>& segments() const { return segments_; }
  const Permutation& underlying() const { return underlying_; }
  std::vector<int> type_signature() const;
  int letter_count() const { return underlying_.size(); }
  const std::string& str() const { return str_; }

  friend bool operator==(const VincularPattern& a, const VincularPattern& b) {
    return a.str_ == b.str_;
  }
  friend bool operator<(const VincularPattern& a, const VincularPattern& b) {
    return a.str_ < b.str_;
  }

private:
  std::vector<std::vector<int>> segments_;
  Permutation underlying_;
  std::string str_;
};

Permutation apply_symmetry(Symmetry g, const Permutation& p);

/// Complement keeps the dash layout and complements the underlying
/// permutation; reverse reads the whole dashed word backwards.
VincularPattern apply_symmetry(Symmetry g, const VincularPattern& p);

/// A set of patterns kept in canonical order (lexicographic on pattern text),
/// without duplicates.
class PatternSet {
public:
  PatternSet() = default;
  explicit PatternSet(std::vector<VincularPattern> patterns);

  /// Comma-separated pattern list; "" is the empty set.
  static PatternSet parse(std::string_view text);

  const std::vector<VincularPattern>& patterns() const { return patterns_; }
  int size() const { return static_cast<int>(patterns_.size()); }
  bool empty() const { return patterns_.empty(); }
  const std::string& str() const { return str_; }

  friend bool operator==(const PatternSet& a, const PatternSet& b) { return a.str_ == b.str_; }
  friend bool operator<(const PatternSet& a, const PatternSet& b) { return a.str_ < b.str_; }

private:
  std::vector<VincularPattern> patterns_;
  std::string str_;
};

/// One embedding of a pattern in a host: the flattened host positions,
/// consecutive within each segment, strictly increasing across segments.
struct Occurrence {
  std::vector<int> positions;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences, ordered lexicographically on the position tuple.
std::vector<Occurrence> occurrences(const VincularPattern& p, const Permutation& host);

long long count_occurrences(const VincularPattern& p, const Permutation& host);

bool contains(const VincularPattern& p, const Permutation& host);
bool avoids(const VincularPattern& p, const Permutation& host);
bool avoids(const PatternSet& set, const Permutation& host);

namespace detail {

/// True when some occurrence of p in the word `letters` has its final letter
/// exactly at position end_pos. This is the incremental check behind pruned
/// enumeration: an occurrence appears in a growing prefix exactly when its
/// last letter is placed.
bool occurrence_ending_at(const VincularPattern& p, const std::vector<int>& letters,
                          int end_pos);

}  // namespace detail

}  // namespace vincular
