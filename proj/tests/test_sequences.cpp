#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "vincular/sequences.hpp"

using namespace vincular;

namespace {

// Listed reference values; a runs to index 14, b to index 9.
const std::vector<long long> kAValues = {1,    1,    2,     4,     9,      22,     58,    164,
                                         496,  1601, 5502,  20075, 77531,  315947, 1354279};
const std::vector<long long> kBValues = {1, 1, 2, 4, 9, 23, 65, 199, 654, 2296};

}  // namespace

TEST_CASE("partition generation is canonical and complete") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front() == SetPartition{});
  CHECK(partitions(3).size() == 5);
  CHECK(partitions(4).size() == 15);
  for (int n = 0; n <= 7; ++n)
    CHECK((long long)partitions(n).size() == oracles::partition_count(n));
  // canonical block form
  const SetPartition p({{4, 5, 7, 9}, {2}, {6}, {8, 1, 3}});
  CHECK(p.str() == "{1,3,8}/{2}/{4,5,7,9}/{6}");
  CHECK(SetPartition::parse("{1,3,8}/{2}/{4,5,7,9}/{6}") == p);
  CHECK(SetPartition::parse("").ground_size() == 0);
  CHECK_THROWS_AS(SetPartition({{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(partitions(13), std::out_of_range);
}

TEST_CASE("partition flags follow the definitions") {
  const auto f1 = partition_flags(SetPartition({{1, 3}, {2, 4}}));
  CHECK(!f1.non_overlapping);
  const auto f2 = partition_flags(SetPartition({{1}, {2}, {3}}));
  CHECK(f2.non_overlapping);
  CHECK(f2.monotone);
  CHECK(f2.strongly_monotone);
  const auto f3 = partition_flags(SetPartition({{1, 2}, {3}}));
  CHECK(f3.strongly_monotone);
  // monotone looks only at non-singleton blocks
  const auto f4 = partition_flags(SetPartition({{1, 4}, {2}, {3, 5}}));
  CHECK(f4.monotone);
  CHECK(!f4.strongly_monotone);  // by minima: {1,4},{2},{3,5} has maxima 4,2,5
  // strongly monotone implies monotone
  for (const auto& p : partitions(6)) {
    const auto f = partition_flags(p);
    if (f.strongly_monotone) CHECK(f.monotone);
  }
}

TEST_CASE("brute-force counts") {
  CHECK(bessel_bruteforce(0) == 1);
  CHECK(bessel_bruteforce(3) == 5);
  CHECK(bessel_bruteforce(4) == 14);
  const std::vector<long long> bessel = {1, 1, 2, 5, 14, 43, 143, 509, 1922};
  for (int n = 0; n <= 8; ++n) CHECK(bessel_bruteforce(n) == bessel[n]);

  CHECK(strongly_monotone_count(0) == 1);
  CHECK(strongly_monotone_count(4) == 9);
  CHECK(strongly_monotone_count(6) == 58);
  for (int n = 0; n <= 9; ++n) CHECK(strongly_monotone_count(n) == kAValues[n]);

  CHECK_THROWS_AS(bessel_bruteforce(13), std::out_of_range);
  CHECK_THROWS_AS(strongly_monotone_count(-1), std::out_of_range);
}

TEST_CASE("monotone partitions are equinumerous with non-overlapping ones") {
  for (int n = 0; n <= 10; ++n) CHECK(monotone_count(n) == bessel_bruteforce(n));
}

TEST_CASE("a-series from the generating function") {
  CHECK(a_series_from_gf(4) == std::vector<long long>{1, 1, 2, 4, 9});
  CHECK(a_series_from_gf(0) == std::vector<long long>{1});
  CHECK(a_series_from_gf(14) == kAValues);
  CHECK_THROWS_AS(a_series_from_gf(15), std::out_of_range);
}

TEST_CASE("a-series from the continued fraction") {
  CHECK(a_series_from_cf(5, 4) == std::vector<long long>{1, 1, 2, 4, 9, 22});
  CHECK(a_series_from_cf(0, 1) == std::vector<long long>{1});
  CHECK(a_series_from_cf(10, 7) == a_series_from_gf(10));
  CHECK(a_series_from_cf(12, 8) == a_series_from_gf(12));
  CHECK_THROWS_AS(a_series_from_cf(10, 3), std::invalid_argument);
}

TEST_CASE("catalog values") {
  CHECK(catalog_value("a_strongly_monotone", 7) == 164);
  CHECK(catalog_value("b_class7", 5) == 23);
  CHECK(catalog_value("bell", 5) == 52);
  for (int n = 0; n <= 9; ++n) CHECK(catalog_value("b_class7", n) == kBValues[n]);

  // bell against the test-local recursive count
  for (int n = 0; n <= 8; ++n) CHECK(catalog_value("bell", n) == oracles::partition_count(n));

  const std::vector<long long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  const std::vector<long long> motzkin = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
  const std::vector<long long> involutions = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620};
  const std::vector<long long> fibonacci = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int n = 0; n <= 9; ++n) {
    CHECK(catalog_value("catalan", n) == catalan[n]);
    CHECK(catalog_value("motzkin", n) == motzkin[n]);
    CHECK(catalog_value("involutions", n) == involutions[n]);
    CHECK(catalog_value("fibonacci", n) == fibonacci[n]);
  }

  CHECK(catalog_value("zero", 7) == 0);
  CHECK(catalog_value("n", 7) == 7);
  CHECK(catalog_value("two_n_minus_2", 5) == 8);
  CHECK(catalog_value("n_choose_2_plus_1", 5) == 11);
  CHECK(catalog_value("pow2_n_minus_1", 5) == 16);
  CHECK(catalog_value("pow2_n_minus_2_plus_1", 5) == 9);
  CHECK(catalog_value("central_binomial", 5) == 10);
  CHECK(catalog_value("central_binomial", 8) == 70);

  // bessel and a stay consistent across their brute-force and series routes
  for (int n = 0; n <= 12; ++n) {
    CHECK(catalog_value("bessel", n) == bessel_bruteforce(n));
    CHECK(catalog_value("a_strongly_monotone", n) == kAValues[n]);
  }
  CHECK(catalog_value("a_strongly_monotone", 14) == kAValues[14]);
  // the extension past the brute-force range keeps the defining relation
  // a(n) = a(n-1) + sum bessel(k-2) a(n-k)
  for (int n = 13; n <= 18; ++n) {
    long long acc = catalog_value("a_strongly_monotone", n - 1);
    for (int k = 2; k <= n; ++k)
      acc += catalog_value("bessel", k - 2) * catalog_value("a_strongly_monotone", n - k);
    CHECK(catalog_value("a_strongly_monotone", n) == acc);
  }

  CHECK_THROWS_AS(catalog_value("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog_value("bell", 21), std::out_of_range);
  CHECK_THROWS_AS(catalog_value("bell", -1), std::out_of_range);
}

TEST_CASE("catalog names are exactly the documented set") {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{
                     "zero", "n", "two_n_minus_2", "n_choose_2_plus_1", "pow2_n_minus_1",
                     "pow2_n_minus_2_plus_1", "central_binomial", "fibonacci", "catalan",
                     "motzkin", "bell", "bessel", "involutions", "a_strongly_monotone",
                     "b_class7"});
}

TEST_CASE("identification") {
  const std::vector<long long> motzkin = {1, 1, 2, 4, 9, 21, 51};
  auto has = [](const std::vector<Identification>& ids, const char* name, int offset) {
    return std::count(ids.begin(), ids.end(), Identification{name, offset}) == 1;
  };
  CHECK(has(identify(motzkin), "motzkin", 0));
  CHECK(has(identify(std::vector<long long>{1, 1, 2, 4, 10, 26, 76}), "involutions", 0));
  CHECK(has(identify(std::vector<long long>{1, 1, 2, 5, 15, 52, 203}), "bell", 0));
  // offsets: 2^(n-1) sequences start matching at n = 1
  CHECK(has(identify(std::vector<long long>{1, 1, 2, 4, 8, 16, 32}), "pow2_n_minus_1", 1));
  CHECK(identify(std::vector<long long>{5, 8, 13, 21, 34, 55}).empty());
  CHECK_THROWS_AS(identify(std::vector<long long>{1, 1, 2}), std::invalid_argument);
}

TEST_CASE("strongly monotone sum equals the a-series, non-overlapping sum the bessel one") {
  for (int n = 0; n <= 9; ++n) {
    long long strong = 0, nonov = 0;
    for (const auto& p : partitions(n)) {
      const auto f = partition_flags(p);
      strong += f.strongly_monotone;
      nonov += f.non_overlapping;
    }
    CHECK(strong == catalog_value("a_strongly_monotone", n));
    CHECK(nonov == catalog_value("bessel", n));
  }
}
