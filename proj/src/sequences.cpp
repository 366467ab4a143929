#include "vincular/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace vincular {

namespace {

constexpr int kPartitionMaxN = 12;
constexpr int kCatalogMaxN = 20;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in sequence arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in sequence arithmetic");
  return r;
}

using Blocks = std::vector<std::vector<int>>;

// Blocks are ordered by minima throughout.
bool non_overlapping_blocks(const Blocks& blocks) {
  const int k = static_cast<int>(blocks.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int max_i = blocks[i].back();
      if (max_i > blocks[j].front() && max_i < blocks[j].back()) return false;
    }
  return true;
}

bool strongly_monotone_blocks(const Blocks& blocks) {
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].back() > blocks[i + 1].back()) return false;
  return true;
}

bool monotone_blocks(const Blocks& blocks) {
  int prev_max = 0;
  for (const auto& b : blocks) {
    if (b.size() == 1) continue;
    if (b.back() < prev_max) return false;
    prev_max = b.back();
  }
  return true;
}

void require_partition_range(int n) {
  if (n < 0 || n > kPartitionMaxN)
    throw std::out_of_range("partition brute force supports n in [0," +
                            std::to_string(kPartitionMaxN) + "]");
}

using Series = std::vector<long long>;

// Intermediate series coefficients overflow 64 bits (the deep continued
// fraction levels grow like c^m), so series arithmetic runs on 128 bits and
// narrows at the boundary.
using WideSeries = std::vector<__int128>;

__int128 wide_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in sequence arithmetic");
  return r;
}

__int128 wide_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in sequence arithmetic");
  return r;
}

Series narrow(const WideSeries& w) {
  Series out;
  out.reserve(w.size());
  for (__int128 x : w) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
      throw std::overflow_error("series coefficient exceeds 64 bits");
    out.push_back(static_cast<long long>(x));
  }
  return out;
}

// Reciprocal of a power series with constant term 1, truncated at n_max.
WideSeries reciprocal_trunc(const WideSeries& d, int n_max) {
  WideSeries r(n_max + 1, 0);
  r[0] = 1;
  for (int i = 1; i <= n_max; ++i) {
    __int128 acc = 0;
    for (int k = 1; k <= i && k < static_cast<int>(d.size()); ++k)
      acc = wide_add(acc, wide_mul(d[k], r[i - k]));
    r[i] = -acc;
  }
  return r;
}

}  // namespace

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block may not be empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("blocks do not partition [n]");
  n_ = static_cast<int>(all.size());
}

SetPartition SetPartition::parse(std::string_view text) {
  if (text.empty()) return SetPartition{};
  std::vector<std::vector<int>> blocks;
  size_t start = 0;
  while (start <= text.size()) {
    size_t slash = text.find('/', start);
    std::string_view tok = slash == std::string_view::npos ? text.substr(start)
                                                           : text.substr(start, slash - start);
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
      throw std::invalid_argument("bad partition block '" + std::string(tok) + "'");
    tok = tok.substr(1, tok.size() - 2);
    std::vector<int> block;
    size_t p = 0;
    while (p <= tok.size()) {
      size_t comma = tok.find(',', p);
      std::string_view num =
          comma == std::string_view::npos ? tok.substr(p) : tok.substr(p, comma - p);
      int value = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc{} || ptr != num.data() + num.size() || value < 1)
        throw std::invalid_argument("bad partition element '" + std::string(num) + "'");
      block.push_back(value);
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return SetPartition(std::move(blocks));
}

std::string SetPartition::str() const {
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '/';
    out += '{';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
    out += '}';
  }
  return out;
}

PartitionFlags partition_flags(const SetPartition& p) {
  return {non_overlapping_blocks(p.blocks()), monotone_blocks(p.blocks()),
          strongly_monotone_blocks(p.blocks())};
}

void for_each_partition(int n,
                        const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Blocks blocks;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      visit(blocks);
      return;
    }
    // index-based: deeper levels grow and shrink the block vector
    for (size_t j = 0; j < blocks.size(); ++j) {
      blocks[j].push_back(next);
      self(self, next + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({next});
    self(self, next + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

std::vector<SetPartition> partitions(int n) {
  require_partition_range(n);
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const Blocks& blocks) { out.emplace_back(SetPartition(blocks)); });
  return out;
}

long long bessel_bruteforce(int n) {
  require_partition_range(n);
  long long count = 0;
  for_each_partition(n, [&](const Blocks& blocks) { count += non_overlapping_blocks(blocks); });
  return count;
}

long long strongly_monotone_count(int n) {
  require_partition_range(n);
  long long count = 0;
  for_each_partition(n,
                     [&](const Blocks& blocks) { count += strongly_monotone_blocks(blocks); });
  return count;
}

long long monotone_count(int n) {
  require_partition_range(n);
  long long count = 0;
  for_each_partition(n, [&](const Blocks& blocks) { count += monotone_blocks(blocks); });
  return count;
}

std::vector<long long> a_series_from_gf(int n_max) {
  if (n_max < 0 || n_max > 14)
    throw std::out_of_range("a_series_from_gf supports n_max in [0,14]");
  WideSeries d(n_max + 1, 0);
  d[0] = 1;
  if (n_max >= 1) d[1] = -1;
  for (int m = 2; m <= n_max; ++m) d[m] = -bessel_bruteforce(m - 2);
  return narrow(reciprocal_trunc(d, n_max));
}

std::vector<long long> a_series_from_cf(int n_max, int depth) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (depth < (n_max + 1) / 2 + 1)
    throw std::invalid_argument("insufficient continued-fraction depth for requested order");
  WideSeries g(n_max + 1, 0);
  g[0] = 1;
  for (int level = depth - 1; level >= 0; --level) {
    const __int128 c = std::max(1, level);
    WideSeries denom(n_max + 1, 0);
    denom[0] = 1;
    if (n_max >= 1) denom[1] = -c;
    for (int m = 2; m <= n_max; ++m) denom[m] = -g[m - 2];
    g = reciprocal_trunc(denom, n_max);
  }
  return narrow(g);
}

namespace {

// The a-series out to the catalog bound, and the non-overlapping counts
// recovered from its reciprocal: x^2 B(x) = 1 - x - 1/A(x).
const Series& extended_a_series() {
  static const Series a = a_series_from_cf(kCatalogMaxN + 2, (kCatalogMaxN + 2) / 2 + 1);
  return a;
}

Series extended_bessel() {
  const Series& a = extended_a_series();
  WideSeries wide(a.begin(), a.end());
  WideSeries r = reciprocal_trunc(wide, kCatalogMaxN + 2);
  WideSeries b(kCatalogMaxN + 1, 0);
  for (int n = 0; n <= kCatalogMaxN; ++n) b[n] = -r[n + 2];
  return narrow(b);
}

struct CatalogEntryImpl {
  std::string name;
  std::string description;
  std::function<long long(int, const std::vector<long long>&)> value;  // (n, prefix vals)
  std::mutex mu;
  std::vector<long long> vals;
};

std::vector<CatalogEntryImpl>& catalog_impl() {
  static std::vector<CatalogEntryImpl>* entries = [] {
    auto* e = new std::vector<CatalogEntryImpl>(15);
    auto set = [&](int i, std::string name, std::string description,
                   std::function<long long(int, const std::vector<long long>&)> value) {
      (*e)[i].name = std::move(name);
      (*e)[i].description = std::move(description);
      (*e)[i].value = std::move(value);
    };
    set(0, "zero", "the zero sequence", [](int, const auto&) { return 0LL; });
    set(1, "n", "the index itself", [](int n, const auto&) { return (long long)n; });
    set(2, "two_n_minus_2", "2(n-1)", [](int n, const auto&) { return 2LL * (n - 1); });
    set(3, "n_choose_2_plus_1", "C(n,2) + 1",
        [](int n, const auto&) { return (long long)n * (n - 1) / 2 + 1; });
    set(4, "pow2_n_minus_1", "2^(n-1)",
        [](int n, const auto&) { return n == 0 ? 0LL : 1LL << (n - 1); });
    set(5, "pow2_n_minus_2_plus_1", "2^(n-2) + 1",
        [](int n, const auto&) { return n < 2 ? 1LL : (1LL << (n - 2)) + 1; });
    set(6, "central_binomial", "C(n, floor(n/2))", [](int n, const auto&) {
      long long v = 1;
      for (int i = 0; i < n / 2; ++i) v = checked_mul(v, n - i) / (i + 1);
      return v;
    });
    set(7, "fibonacci", "F(0) = F(1) = 1, F(n+1) = F(n) + F(n-1)",
        [](int n, const auto& prev) {
          return n < 2 ? 1LL : checked_add(prev[n - 1], prev[n - 2]);
        });
    set(8, "catalan", "binary tree shapes with n nodes", [](int n, const auto& prev) {
      if (n == 0) return 1LL;
      long long acc = 0;
      for (int k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(prev[k], prev[n - 1 - k]));
      return acc;
    });
    set(9, "motzkin", "nonintersecting chord diagrams on n points",
        [](int n, const auto& prev) {
          if (n == 0) return 1LL;
          long long acc = prev[n - 1];
          for (int k = 0; k <= n - 2; ++k)
            acc = checked_add(acc, checked_mul(prev[k], prev[n - 2 - k]));
          return acc;
        });
    set(10, "bell", "set partitions of [n]", [](int n, const auto&) {
      // Bell triangle; row r opens with the previous row's last entry.
      std::vector<long long> row{1};
      for (int r = 1; r <= n; ++r) {
        std::vector<long long> next{row.back()};
        for (long long x : row) next.push_back(checked_add(next.back(), x));
        row = std::move(next);
      }
      return row.front();
    });
    set(11, "bessel", "non-overlapping partitions of [n]", [](int n, const auto&) {
      if (n <= kPartitionMaxN) return bessel_bruteforce(n);
      static const Series ext = extended_bessel();
      return ext[n];
    });
    set(12, "involutions", "involutions in S_n", [](int n, const auto& prev) {
      if (n < 2) return 1LL;
      return checked_add(prev[n - 1], checked_mul(n - 1, prev[n - 2]));
    });
    set(13, "a_strongly_monotone", "strongly monotone partitions of [n]",
        [](int n, const auto&) {
          if (n <= 14) {
            static const Series gf = a_series_from_gf(14);
            return gf[n];
          }
          return extended_a_series()[n];
        });
    set(14, "b_class7", "b(0) = b(1) = 1, b(n+2) = b(n+1) + sum C(n,k) b(k)",
        [](int n, const auto& prev) {
          if (n < 2) return 1LL;
          const int m = n - 2;  // b(m+2)
          long long acc = prev[m + 1];
          long long binom = 1;
          for (int k = 0; k <= m; ++k) {
            acc = checked_add(acc, checked_mul(binom, prev[k]));
            binom = checked_mul(binom, m - k) / (k + 1);
          }
          return acc;
        });
    return e;
  }();
  return *entries;
}

CatalogEntryImpl& find_entry(std::string_view name) {
  for (auto& e : catalog_impl())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog sequence '" + std::string(name) + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry>* entries = [] {
    auto* out = new std::vector<CatalogEntry>;
    for (auto& e : catalog_impl()) out->push_back({e.name, e.description});
    return out;
  }();
  return *entries;
}

long long catalog_value(std::string_view name, int n) {
  if (n < 0 || n > kCatalogMaxN)
    throw std::out_of_range("catalog supports n in [0," + std::to_string(kCatalogMaxN) + "]");
  CatalogEntryImpl& entry = find_entry(name);
  std::lock_guard<std::mutex> lock(entry.mu);
  while (static_cast<int>(entry.vals.size()) <= n)
    entry.vals.push_back(entry.value(static_cast<int>(entry.vals.size()), entry.vals));
  return entry.vals[n];
}

std::vector<Identification> identify(std::span<const long long> counts) {
  if (counts.size() < 6)
    throw std::invalid_argument("identification needs at least 6 sequence entries");
  const int hi = std::min(static_cast<int>(counts.size()) - 1, kCatalogMaxN);
  std::vector<Identification> out;
  for (const auto& entry : catalog_entries()) {
    for (int offset = 0; offset <= 3; ++offset) {
      bool ok = true;
      for (int n = offset; n <= hi && ok; ++n)
        ok = catalog_value(entry.name, n) == counts[n];
      if (ok) {
        out.push_back({entry.name, offset});
        break;
      }
    }
  }
  return out;
}

}  // namespace vincular
