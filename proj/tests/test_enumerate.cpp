#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/report.hpp"
#include "vincular/tables.hpp"

using namespace vincular;

TEST_CASE("list_avoiders basics") {
  const auto avoiders = list_avoiders(PatternSet::parse("1-23,3-21"), 3);
  REQUIRE(avoiders.size() == 4);
  CHECK(avoiders[0] == Permutation::parse("132"));
  CHECK(avoiders[1] == Permutation::parse("213"));
  CHECK(avoiders[2] == Permutation::parse("231"));
  CHECK(avoiders[3] == Permutation::parse("312"));

  CHECK(list_avoiders(PatternSet::parse("1-23"), 0) ==
        std::vector<Permutation>{Permutation{}});
  CHECK(list_avoiders(PatternSet{}, 3).size() == 6);
  CHECK_THROWS_AS(list_avoiders(PatternSet{}, 13), std::out_of_range);
  CHECK_THROWS_AS(list_avoiders(PatternSet{}, -1), std::out_of_range);
}

TEST_CASE("count_avoiders reproduces the catalog values") {
  CHECK(count_avoiders(PatternSet::parse("1-23"), 5) == 52);
  CHECK(count_avoiders(PatternSet::parse("2-13"), 4) == 14);
  CHECK(count_avoiders(PatternSet::parse("1-23,13-2"), 4) == 9);
}

TEST_CASE("counting sequences match the listed values") {
  CHECK(counting_sequence(PatternSet::parse("1-23,3-12"), 9).str() ==
        "1,1,2,4,9,23,65,199,654,2296");
  CHECK(counting_sequence(PatternSet::parse("1-32,21-3"), 8).str() == "1,1,2,4,9,22,58,164,496");
  std::vector<VincularPattern> all = pattern_universe();
  CHECK(counting_sequence(PatternSet(all), 5).str() == "1,1,2,0,0,0");
}

TEST_CASE("pruned enumeration equals the naive filter") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<VincularPattern> chosen;
    for (const auto& p : pattern_universe())
      if (rng() % 3 == 0) chosen.push_back(p);
    const PatternSet set(std::move(chosen));
    for (int n = 0; n <= 6; ++n) CHECK(list_avoiders(set, n) == oracles::naive_avoiders(set, n));
  }
}

TEST_CASE("avoider counts are monotone under pattern-set inclusion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VincularPattern> small, large;
    for (const auto& p : pattern_universe()) {
      const bool in_small = rng() % 4 == 0;
      if (in_small) small.push_back(p);
      if (in_small || rng() % 3 == 0) large.push_back(p);
    }
    const PatternSet sub(std::move(small)), super(std::move(large));
    for (int n = 0; n <= 6; ++n)
      CHECK(count_avoiders(super, n) <= count_avoiders(sub, n));
  }
}

TEST_CASE("orbits") {
  auto strs = [](const std::vector<PatternSet>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets) out.push_back(s.str());
    return out;
  };
  CHECK(strs(orbit(PatternSet::parse("1-23"))) ==
        std::vector<std::string>{"1-23", "12-3", "3-21", "32-1"});
  CHECK(strs(orbit(PatternSet::parse("1-23,3-21"))) ==
        std::vector<std::string>{"1-23,3-21", "12-3,32-1"});
  CHECK(orbit(PatternSet::parse("2-13,31-2")).size() == 2);
}

TEST_CASE("classification of singles and pairs") {
  const auto singles = classify(1, 7);
  CHECK(singles.set_count() == 12);
  CHECK(singles.symmetry_class_count() == 3);
  CHECK(singles.wilf_class_count() == 2);

  const auto pairs = classify(2, 7);
  CHECK(pairs.set_count() == 66);
  CHECK(pairs.symmetry_class_count() == 21);
  CHECK(pairs.wilf_class_count() == 10);
}

TEST_CASE("classification is independent of the thread count") {
  const auto a = classify(2, 6, 1);
  const auto b = classify(2, 6, 4);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("computed pair orbits are exactly the bundled table classes") {
  const auto report = classify(2, 5);
  std::set<std::set<std::string>> computed;
  for (const auto& members : report.orbits) {
    std::set<std::string> names;
    for (int i : members) names.insert(report.sets[i].str());
    computed.insert(names);
  }
  std::set<std::set<std::string>> expected;
  for (const auto& row : pairs_table()) {
    std::set<std::string> names;
    for (const auto& s : row.sets) names.insert(s.str());
    expected.insert(names);
  }
  CHECK(computed == expected);
}

TEST_CASE("witness permutations") {
  CHECK(witness_perm(2) == Permutation::parse("21"));
  CHECK(witness_perm(3) == Permutation::parse("231"));
  CHECK(witness_perm(6) == Permutation::parse("435261"));
  CHECK_THROWS_AS(witness_perm(1), std::domain_error);
  const PatternSet set = PatternSet::parse("1-23,3-21");
  for (int n = 2; n <= 8; ++n) {
    const auto w = witness_perm(n);
    CHECK(w.at(n) == 1);
    CHECK(w.at(n - 1) == n);
    CHECK(avoids(set, w));
    // unique among the avoiders
    int ending_n1 = 0;
    for (const auto& p : list_avoiders(set, n))
      ending_n1 += p.at(n) == 1 && p.at(n - 1) == n;
    CHECK(ending_n1 == 1);
  }
}

TEST_CASE("table verification: singles") {
  const auto checks = verify_singles(7);
  REQUIRE(checks.size() == 12);
  for (const auto& check : checks) {
    CHECK(check.pass);
    CHECK(check.n0 == 0);
  }
}

TEST_CASE("table verification: pairs at n_max = 8") {
  const auto checks = verify_pairs(8);
  REQUIRE(checks.size() == 66);
  for (const auto& check : checks) {
    CHECK(check.pass);
    if (check.formula == "zero")
      CHECK(check.n0 == 6);
    else if (check.formula == "two_n_minus_2")
      CHECK(check.n0 == 2);
    else
      CHECK(check.n0 <= 1);
  }
}

TEST_CASE("table verification: the three-pattern panel") {
  const auto check = verify_multi(3, 7);
  CHECK(check.actual_sets == 220);
  CHECK(check.actual_classes == 55);
  CHECK(check.actual_families == 9);
  CHECK(check.pass);
}

TEST_CASE("strict sequence grouping refines the panel's formula families") {
  // Same-formula orbits may disagree below their thresholds, so the
  // evidence-level Wilf count at small n exceeds the family count.
  const auto report = classify(3, 8);
  const auto check = verify_multi(3, 8);
  CHECK(check.actual_families == 9);
  CHECK(report.wilf_class_count() >= check.actual_families);
}

TEST_CASE("report rendering stays structured") {
  const auto report = classify(1, 6);
  const auto j = to_json(report);
  CHECK(j["sets"] == 12);
  CHECK(j["symmetry_classes"] == 3);
  CHECK(j["wilf_classes"] == 2);
  CHECK(j["orbits"].size() == 3);
  const std::string text = render_text(report);
  CHECK(text.find("symmetry_classes=3") != std::string::npos);
  CHECK(text.find("bell@0") != std::string::npos);

  const auto checks = verify_singles(6);
  const auto jr = to_json(checks);
  CHECK(jr["verdict"] == "pass");
  CHECK(jr["rows"].size() == 12);
}
