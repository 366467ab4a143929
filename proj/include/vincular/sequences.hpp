#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vincular {

/// A partition of [n] into nonempty blocks. Canonical form: elements sorted
/// inside each block, blocks sorted by their minima.
class SetPartition {
public:
  SetPartition() = default;  // the empty partition (n = 0)
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  /// Parses the block serialization, e.g. "{1,3,8}/{2}/{4,5,7,9}/{6}".
  /// "" is the empty partition.
  static SetPartition parse(std::string_view text);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

struct PartitionFlags {
  bool non_overlapping;    // no blocks A, B with min A < min B < max A < max B
  bool monotone;           // non-singleton blocks sorted by min have increasing maxima
  bool strongly_monotone;  // all blocks sorted by min have increasing maxima
};

PartitionFlags partition_flags(const SetPartition& p);

/// Visits every partition of [n] exactly once; blocks arrive in canonical
/// form. Deterministic order (restricted-growth order).
void for_each_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit);

/// Materializes all partitions of [n]; n <= 12.
std::vector<SetPartition> partitions(int n);

/// Number of non-overlapping partitions of [n], by brute force; n <= 12.
long long bessel_bruteforce(int n);

/// Number of strongly monotone partitions of [n], by brute force; n <= 12.
long long strongly_monotone_count(int n);

/// Number of monotone partitions of [n], by brute force; n <= 12.
long long monotone_count(int n);

/// Coefficients a_0..a_nmax of 1 / (1 - x - x^2 B(x)), where B is the
/// generating function of the non-overlapping partition counts (supplied by
/// bessel_bruteforce). n_max <= 14.
std::vector<long long> a_series_from_gf(int n_max);

/// Same coefficients from the continued fraction with partial denominators
/// 1 - x, 1 - x, 1 - 2x, 1 - 3x, ... and x^2 numerators, truncated at the
/// given depth. Requires depth >= ceil(n_max / 2) + 1 so the truncation error
/// stays above x^n_max.
std::vector<long long> a_series_from_cf(int n_max, int depth);

// Sequence catalog. Names (exact strings):
//   zero, n, two_n_minus_2, n_choose_2_plus_1, pow2_n_minus_1,
//   pow2_n_minus_2_plus_1, central_binomial, fibonacci, catalan, motzkin,
//   bell, bessel, involutions, a_strongly_monotone, b_class7
// Every entry is total on 0..20 with exact checked integer arithmetic.
// Closed forms with a fractional value below their natural threshold
// (pow2_n_minus_1 at n = 0, two_n_minus_2, ...) take the integer floor there;
// thresholds are discovered by the verifiers, never assumed.
struct CatalogEntry {
  std::string name;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

long long catalog_value(std::string_view name, int n);

struct Identification {
  std::string name;
  int offset;

  friend bool operator==(const Identification&, const Identification&) = default;
};

/// Catalog entries matching counts[n] for every n >= offset, with the
/// smallest offset in 0..3. Requires at least 6 entries.
std::vector<Identification> identify(std::span<const long long> counts);

}  // namespace vincular
