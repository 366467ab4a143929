#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vincular/bijections.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/report.hpp"
#include "vincular/sequences.hpp"
#include "vincular/tables.hpp"
#include "vincular/version.hpp"

namespace py = pybind11;
using namespace vincular;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<int>> occurrence_positions(const std::string& pattern,
                                                   const std::string& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& occ :
       occurrences(VincularPattern::parse(pattern), Permutation::parse(perm)))
    out.push_back(occ.positions);
  return out;
}

}  // namespace

PYBIND11_MODULE(_vincular, m) {
  m.doc() = "Dash-pattern toolkit: occurrence counting, avoider enumeration, "
            "symmetry/Wilf classification, sequence catalog and bijections. "
            "Permutations are one-line strings (digits up to n = 9, comma-separated "
            "beyond); pattern sets are comma-separated pattern strings.";
  m.attr("__version__") = kVersion;

  m.def(
      "reduce",
      [](const std::vector<int>& letters) { return reduce(Word(letters)).letters(); },
      py::arg("letters"), "Rank-reduce a repeat-free word to a permutation of [n].");
  m.def(
      "reverse_perm",
      [](const std::string& p) { return reverse(Permutation::parse(p)).str(); }, py::arg("perm"));
  m.def(
      "complement_perm",
      [](const std::string& p) { return complement(Permutation::parse(p)).str(); },
      py::arg("perm"));
  m.def(
      "left_to_right_minima",
      [](const std::string& p) { return left_to_right_minima(Permutation::parse(p)); },
      py::arg("perm"));

  m.def(
      "count_occurrences",
      [](const std::string& pattern, const std::string& perm) {
        return count_occurrences(VincularPattern::parse(pattern), Permutation::parse(perm));
      },
      py::arg("pattern"), py::arg("perm"));
  m.def("occurrences", &occurrence_positions, py::arg("pattern"), py::arg("perm"),
        "Flattened 1-indexed host positions of every occurrence.");
  m.def(
      "avoids",
      [](const std::string& patterns, const std::string& perm) {
        return avoids(PatternSet::parse(patterns), Permutation::parse(perm));
      },
      py::arg("patterns"), py::arg("perm"));
  m.def(
      "pattern_symmetry",
      [](const std::string& g, const std::string& pattern) {
        Symmetry sym;
        if (g == "identity")
          sym = Symmetry::kIdentity;
        else if (g == "reverse")
          sym = Symmetry::kReverse;
        else if (g == "complement")
          sym = Symmetry::kComplement;
        else if (g == "reverse-complement")
          sym = Symmetry::kReverseComplement;
        else
          throw std::invalid_argument("unknown symmetry '" + g + "'");
        return apply_symmetry(sym, VincularPattern::parse(pattern)).str();
      },
      py::arg("symmetry"), py::arg("pattern"));

  m.def(
      "list_avoiders",
      [](const std::string& patterns, int n) {
        std::vector<std::string> out;
        for (const auto& p : list_avoiders(PatternSet::parse(patterns), n))
          out.push_back(p.str());
        return out;
      },
      py::arg("patterns"), py::arg("n"));
  m.def(
      "count_avoiders",
      [](const std::string& patterns, int n) {
        return count_avoiders(PatternSet::parse(patterns), n);
      },
      py::arg("patterns"), py::arg("n"));
  m.def(
      "counting_sequence",
      [](const std::string& patterns, int max_n) {
        return counting_sequence(PatternSet::parse(patterns), max_n).counts;
      },
      py::arg("patterns"), py::arg("max_n"));
  m.def(
      "orbit",
      [](const std::string& patterns) {
        std::vector<std::string> out;
        for (const auto& s : orbit(PatternSet::parse(patterns))) out.push_back(s.str());
        return out;
      },
      py::arg("patterns"));
  m.def(
      "classify",
      [](int k, int max_n, int threads) { return json_to_py(to_json(classify(k, max_n, threads))); },
      py::arg("k"), py::arg("max_n"), py::arg("threads") = 0);
  m.def(
      "verify_table",
      [](const std::string& table, int k, int max_n, int threads) {
        if (table == "singles") return json_to_py(to_json(verify_singles(max_n)));
        if (table == "pairs") return json_to_py(to_json(verify_pairs(max_n, threads)));
        if (table == "multi") return json_to_py(to_json(verify_multi(k, max_n, threads)));
        throw std::invalid_argument("table must be singles, pairs or multi");
      },
      py::arg("table"), py::arg("k") = 3, py::arg("max_n") = 8, py::arg("threads") = 0);
  m.def(
      "witness",
      [](int n) { return witness_perm(n).str(); }, py::arg("n"),
      "The unique avoider of {1-23, 3-21} ending with the pair n, 1.");

  m.def(
      "catalog_value",
      [](const std::string& name, int n) { return catalog_value(name, n); }, py::arg("name"),
      py::arg("n"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def(
      "identify",
      [](const std::vector<long long>& counts) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& id : identify(counts)) out.emplace_back(id.name, id.offset);
        return out;
      },
      py::arg("counts"), "Catalog entries matching from some offset in 0..3.");

  m.def(
      "bijection",
      [](const std::string& name, const std::string& perm) -> std::string {
        const Permutation p = Permutation::parse(perm);
        if (name == "phi123") return phi_123(p).str();
        if (name == "phi132") return phi_132(p).str();
        if (name == "theta") return theta(p).str();
        if (name == "psi-dyck") return psi_dyck_of_perm(p).str();
        if (name == "psi-comp") return psi_comp(p).str();
        if (name == "subset") return subset_map(p).str();
        if (name == "binstring") return binstring_map(p).bits;
        if (name == "lambda") return lambda_map(p).str();
        if (name == "smp") return smp_map(p).str();
        throw std::invalid_argument("unknown bijection '" + name + "'");
      },
      py::arg("name"), py::arg("perm"));
  m.def(
      "bijection_inverse",
      [](const std::string& name, const std::string& input, int n) -> std::string {
        if (name == "phi123") return phi_123_inverse(SetPartition::parse(input)).str();
        if (name == "phi132") return phi_132_inverse(SetPartition::parse(input)).str();
        if (name == "theta") return theta(Permutation::parse(input)).str();
        if (name == "psi-dyck") return perm_from_dyck_213(DyckWord(input)).str();
        if (name == "psi-comp") return psi_comp_inverse(Composition::parse(input)).str();
        if (name == "subset") {
          Subset s;
          s.n = n;
          std::string body = input;
          if (body.size() < 2 || body.front() != '{' || body.back() != '}')
            throw std::invalid_argument("subset text must look like {2,4}");
          body = body.substr(1, body.size() - 2);
          size_t pos = 0;
          while (!body.empty() && pos <= body.size()) {
            const size_t comma = body.find(',', pos);
            s.elements.push_back(std::stoi(
                body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
          }
          return subset_map_inverse(s).str();
        }
        if (name == "binstring") {
          BinarySequence b;
          b.bits = input;
          b.n = n >= 0 ? n : static_cast<int>(input.size()) + 1;
          return binstring_map_inverse(b).str();
        }
        if (name == "lambda") return lambda_map_inverse(Permutation::parse(input)).str();
        if (name == "smp") return smp_map_inverse(SetPartition::parse(input)).str();
        throw std::invalid_argument("unknown bijection '" + name + "'");
      },
      py::arg("name"), py::arg("input"), py::arg("n") = -1);
}
