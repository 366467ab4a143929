#include "vincular/report.hpp"

#include <algorithm>
#include <sstream>

namespace vincular {

using nlohmann::json;

json to_json(const CountSequence& seq) { return json(seq.counts); }

namespace {

json identifications_json(const std::vector<Identification>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back({{"name", id.name}, {"offset", id.offset}});
  return out;
}

std::string pad(std::string text, size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

}  // namespace

json to_json(const ClassificationReport& report) {
  json orbits = json::array();
  for (size_t o = 0; o < report.orbits.size(); ++o) {
    json sets = json::array();
    for (int i : report.orbits[o]) sets.push_back(report.sets[i].str());
    orbits.push_back({{"sets", sets}, {"sequence", to_json(report.orbit_sequences[o])}});
  }
  json groups = json::array();
  for (const auto& group : report.wilf_groups) {
    groups.push_back({{"orbits", group.orbit_ids},
                      {"sequence", to_json(group.sequence)},
                      {"identified_as", identifications_json(group.identified_as)}});
  }
  return json{{"k", report.k},
              {"n_max", report.n_max},
              {"sets", report.set_count()},
              {"symmetry_classes", report.symmetry_class_count()},
              {"wilf_classes", report.wilf_class_count()},
              {"orbits", orbits},
              {"wilf_groups", groups}};
}

json to_json(const FormulaCheck& check) {
  return json{{"sets", check.sets.str()},
              {"formula", check.formula},
              {"n0", check.n0},
              {"window", {check.window_lo, check.window_hi}},
              {"sequence", to_json(check.sequence)},
              {"verdict", check.pass ? "pass" : "fail"}};
}

json to_json(const std::vector<FormulaCheck>& checks) {
  json rows = json::array();
  bool pass = true;
  for (const auto& check : checks) {
    rows.push_back(to_json(check));
    pass = pass && check.pass;
  }
  return json{{"rows", rows}, {"verdict", pass ? "pass" : "fail"}};
}

json to_json(const MultiPanelCheck& check) {
  json mults = json::array();
  auto add = [&](const std::string& formula, int size, int expected, int actual) {
    mults.push_back({{"formula", formula},
                     {"orbit_size", size},
                     {"expected", expected},
                     {"actual", actual}});
  };
  for (const auto& [formula, by_size] : check.expected_multiplicities)
    for (const auto& [size, count] : by_size) {
      int actual = 0;
      auto it = check.actual_multiplicities.find(formula);
      if (it != check.actual_multiplicities.end()) {
        auto jt = it->second.find(size);
        if (jt != it->second.end()) actual = jt->second;
      }
      add(formula, size, count, actual);
    }
  for (const auto& [formula, by_size] : check.actual_multiplicities)
    for (const auto& [size, count] : by_size)
      if (!check.expected_multiplicities.count(formula) ||
          !check.expected_multiplicities.at(formula).count(size))
        add(formula, size, 0, count);

  return json{{"k", check.k},
              {"n_max", check.n_max},
              {"sets", {{"expected", check.expected_sets}, {"actual", check.actual_sets}}},
              {"symmetry_classes",
               {{"expected", check.expected_classes}, {"actual", check.actual_classes}}},
              {"formula_families",
               {{"expected", check.expected_families}, {"actual", check.actual_families}}},
              {"multiplicities", mults},
              {"rows", to_json(check.orbit_checks)["rows"]},
              {"verdict", check.pass ? "pass" : "fail"}};
}

std::string render_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "k=" << report.k << " n_max=" << report.n_max << " sets=" << report.set_count()
      << " symmetry_classes=" << report.symmetry_class_count()
      << " wilf_classes=" << report.wilf_class_count() << "\n";
  for (size_t g = 0; g < report.wilf_groups.size(); ++g) {
    const auto& group = report.wilf_groups[g];
    out << "wilf " << g + 1 << ": " << group.sequence.str();
    if (!group.identified_as.empty()) {
      out << "  [";
      for (size_t i = 0; i < group.identified_as.size(); ++i) {
        if (i) out << " ";
        out << group.identified_as[i].name << "@" << group.identified_as[i].offset;
      }
      out << "]";
    }
    out << "\n";
    for (int o : group.orbit_ids) {
      out << "  class " << o + 1 << " (" << report.orbits[o].size() << " sets):";
      for (int i : report.orbits[o]) out << " {" << report.sets[i].str() << "}";
      out << "\n";
    }
  }
  return out.str();
}

std::string render_text(const std::vector<FormulaCheck>& checks, const std::string& table) {
  std::ostringstream out;
  out << "table=" << table << "\n";
  size_t set_width = 4;
  size_t formula_width = 7;
  for (const auto& check : checks) {
    set_width = std::max(set_width, check.sets.str().size());
    formula_width = std::max(formula_width, check.formula.size());
  }
  int passed = 0;
  for (const auto& check : checks) {
    out << pad(check.sets.str(), set_width + 2) << pad(check.formula, formula_width + 2)
        << pad("n0=" + std::to_string(check.n0), 7) << pad(check.pass ? "pass" : "FAIL", 6)
        << check.sequence.str() << "\n";
    passed += check.pass;
  }
  out << passed << "/" << checks.size() << " rows pass\n";
  return out.str();
}

std::string render_text(const MultiPanelCheck& check) {
  std::ostringstream out;
  out << "table=multi k=" << check.k << " n_max=" << check.n_max << "\n";
  out << render_text(check.orbit_checks, "multi-orbits");
  out << "sets: expected=" << check.expected_sets << " actual=" << check.actual_sets << "\n";
  out << "symmetry_classes: expected=" << check.expected_classes
      << " actual=" << check.actual_classes << "\n";
  out << "formula_families: expected=" << check.expected_families
      << " actual=" << check.actual_families << "\n";
  out << "multiplicities (formula  orbit-size x classes  expected/actual):\n";
  for (const auto& [formula, by_size] : check.expected_multiplicities) {
    for (const auto& [size, count] : by_size) {
      int actual = 0;
      auto it = check.actual_multiplicities.find(formula);
      if (it != check.actual_multiplicities.end() && it->second.count(size))
        actual = it->second.at(size);
      out << "  " << pad(formula, 24) << size << "x: " << count << "/" << actual
          << (count == actual ? "" : "  MISMATCH") << "\n";
    }
  }
  for (const auto& [formula, by_size] : check.actual_multiplicities)
    for (const auto& [size, count] : by_size)
      if (!check.expected_multiplicities.count(formula) ||
          !check.expected_multiplicities.at(formula).count(size))
        out << "  " << pad(formula, 24) << size << "x: 0/" << count << "  UNEXPECTED\n";
  out << "panel verdict: " << (check.pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace vincular
