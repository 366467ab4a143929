#include "vincular/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace vincular {

std::string CountSequence::str() const {
  std::string out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

int max_n_bound() {
  static const int bound = [] {
    int b = 12;
    if (const char* env = std::getenv("VINCULAR_MAX_N")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 0 && v < b) b = static_cast<int>(v);
    }
    return b;
  }();
  return bound;
}

namespace {

void require_in_bound(int n) {
  if (n < 0 || n > max_n_bound())
    throw std::out_of_range("n exceeds the enumeration bound (" +
                            std::to_string(max_n_bound()) + ")");
}

struct AvoiderSearch {
  AvoiderSearch(const PatternSet& set_in, int n_in, std::vector<Permutation>* out_in)
      : set(set_in), n(n_in), out(out_in) {}

  const PatternSet& set;
  int n;
  std::vector<Permutation>* out;  // null = count only
  long long count = 0;
  std::vector<int> prefix;
  std::vector<bool> used;

  void run() {
    used.assign(n + 1, false);
    prefix.reserve(n);
    dfs();
  }

  void dfs() {
    if (static_cast<int>(prefix.size()) == n) {
      ++count;
      if (out) out->push_back(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      used[v] = true;
      bool hit = false;
      for (const auto& p : set.patterns()) {
        if (detail::occurrence_ending_at(p, prefix, static_cast<int>(prefix.size()))) {
          hit = true;
          break;
        }
      }
      if (!hit) dfs();
      prefix.pop_back();
      used[v] = false;
    }
  }
};

constexpr long long kFactorial[13] = {1,      1,       2,        6,        24,       120, 720,
                                      5040,   40320,   362880,   3628800,  39916800,
                                      479001600};

void run_parallel(int count, int threads, const std::function<void(int)>& work) {
  int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  t = std::clamp(t, 1, std::max(count, 1));
  if (t <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<Permutation> list_avoiders(const PatternSet& set, int n) {
  require_in_bound(n);
  std::vector<Permutation> out;
  AvoiderSearch search(set, n, &out);
  search.run();
  return out;
}

long long count_avoiders(const PatternSet& set, int n) {
  require_in_bound(n);
  AvoiderSearch search(set, n, nullptr);
  search.run();
  return search.count;
}

CountSequence counting_sequence(const PatternSet& set, int n_max) {
  require_in_bound(n_max);
  CountSequence seq;
  seq.counts.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const long long c = count_avoiders(set, n);
    if (c > kFactorial[n] || (n == 0 && c != 1))
      throw std::logic_error("counting sequence out of range");
    seq.counts.push_back(c);
  }
  return seq;
}

const std::vector<VincularPattern>& pattern_universe() {
  static const std::vector<VincularPattern>* universe = [] {
    auto* out = new std::vector<VincularPattern>;
    for (const char* text : {"1-23", "1-32", "2-13", "2-31", "3-12", "3-21", "12-3", "13-2",
                             "21-3", "23-1", "31-2", "32-1"})
      out->push_back(VincularPattern::parse(text));
    std::sort(out->begin(), out->end());
    return out;
  }();
  return *universe;
}

std::vector<PatternSet> orbit(const PatternSet& set) {
  std::set<PatternSet> members;
  for (Symmetry g : kAllSymmetries) {
    std::vector<VincularPattern> mapped;
    mapped.reserve(set.patterns().size());
    for (const auto& p : set.patterns()) mapped.push_back(apply_symmetry(g, p));
    members.insert(PatternSet(std::move(mapped)));
  }
  return {members.begin(), members.end()};
}

ClassificationReport classify(int k, int n_max, int threads) {
  const int universe_size = static_cast<int>(pattern_universe().size());
  if (k < 1 || k > universe_size)
    throw std::invalid_argument("k must lie in [1," + std::to_string(universe_size) + "]");
  require_in_bound(n_max);

  ClassificationReport report;
  report.k = k;
  report.n_max = n_max;

  // k-subsets of the canonically ordered universe, in lexicographic order.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::vector<VincularPattern> patterns;
    patterns.reserve(k);
    for (int i : pick) patterns.push_back(pattern_universe()[i]);
    report.sets.push_back(PatternSet(std::move(patterns)));
    int i = k - 1;
    while (i >= 0 && pick[i] == universe_size - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<CountSequence> sequences(report.sets.size());
  run_parallel(static_cast<int>(report.sets.size()), threads,
               [&](int i) { sequences[i] = counting_sequence(report.sets[i], n_max); });

  std::map<std::string, int> index_of;
  for (size_t i = 0; i < report.sets.size(); ++i) index_of[report.sets[i].str()] = (int)i;

  std::vector<int> orbit_of(report.sets.size(), -1);
  for (size_t i = 0; i < report.sets.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> members;
    for (const auto& mate : orbit(report.sets[i])) {
      const auto it = index_of.find(mate.str());
      if (it == index_of.end())
        throw std::logic_error("orbit member escapes the subset family");
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    const int orbit_id = static_cast<int>(report.orbits.size());
    for (int m : members) {
      orbit_of[m] = orbit_id;
      if (!(sequences[m] == sequences[i]))
        throw std::logic_error("orbit members disagree on counting sequence");
    }
    report.orbits.push_back(std::move(members));
    report.orbit_sequences.push_back(sequences[i]);
  }

  std::map<std::vector<long long>, int> group_of;
  for (size_t o = 0; o < report.orbits.size(); ++o) {
    const auto& counts = report.orbit_sequences[o].counts;
    auto it = group_of.find(counts);
    if (it == group_of.end()) {
      WilfGroup group;
      group.sequence = report.orbit_sequences[o];
      if (n_max >= 5) group.identified_as = identify(counts);
      group_of.emplace(counts, static_cast<int>(report.wilf_groups.size()));
      group.orbit_ids.push_back(static_cast<int>(o));
      report.wilf_groups.push_back(std::move(group));
    } else {
      report.wilf_groups[it->second].orbit_ids.push_back(static_cast<int>(o));
    }
  }
  return report;
}

Permutation witness_perm(int n) {
  if (n < 2) throw std::domain_error("witness requires n >= 2");
  // Read right to left the word is 1, n, 2, n-1, 3, n-2, ...
  std::vector<int> rev;
  rev.reserve(n);
  int lo = 1, hi = n;
  bool low = true;
  while (lo <= hi) {
    rev.push_back(low ? lo++ : hi--);
    low = !low;
  }
  std::reverse(rev.begin(), rev.end());
  Permutation p(std::move(rev));
  static const PatternSet& class2 = *new PatternSet(PatternSet::parse("1-23,3-21"));
  if (!avoids(class2, p)) throw std::logic_error("witness fails avoidance");
  return p;
}

}  // namespace vincular
