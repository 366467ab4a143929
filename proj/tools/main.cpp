#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vincular/bijections.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/report.hpp"
#include "vincular/sequences.hpp"
#include "vincular/tables.hpp"
#include "vincular/version.hpp"

namespace {

using nlohmann::json;
using namespace vincular;

struct Output {
  bool json_mode = false;
  bool timing = false;
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::string text;

  void emit(double elapsed_ms) const {
    if (!json_mode) {
      std::cout << text;
      return;
    }
    json doc{{"schema", 1},
             {"version", kVersion},
             {"command", command},
             {"inputs", inputs},
             {"results", results}};
    if (timing) doc["timing_ms"] = elapsed_ms;
    std::cout << doc.dump(2) << "\n";
  }
};

std::string identifications_text(const std::vector<Identification>& ids) {
  if (ids.empty()) return "no catalog match\n";
  std::string out;
  for (const auto& id : ids)
    out += id.name + " (offset " + std::to_string(id.offset) + ")\n";
  return out;
}

json identifications_json(const std::vector<Identification>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back({{"name", id.name}, {"offset", id.offset}});
  return out;
}

Subset parse_subset(const std::string& text, int n) {
  Subset s;
  s.n = n;
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("subset text must look like {2,4}");
  const std::string body = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (!body.empty() && pos <= body.size()) {
    const size_t comma = body.find(',', pos);
    const std::string tok =
        body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    s.elements.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"vincular dash-pattern toolkit: occurrence counting, avoider enumeration,\n"
               "symmetry/Wilf classification, sequence catalog and bijections"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", std::string("vincular ") + kVersion);

  Output out;
  int threads = 0;
  app.add_flag("--json", out.json_mode, "structured output");
  app.add_flag("--timing", out.timing, "include timing in structured output");
  app.add_option("--threads", threads, "worker threads for classification (0 = all cores)");

  auto* count_cmd = app.add_subcommand("count", "count occurrences of a pattern in a permutation");
  std::string count_pattern, count_perm;
  bool count_list = false;
  count_cmd->add_option("--pattern", count_pattern, "pattern text, e.g. 1-23")->required();
  count_cmd->add_option("--perm", count_perm, "host permutation")->required();
  count_cmd->add_flag("--list", count_list, "also list the occurrences");

  auto* avoiders_cmd = app.add_subcommand("avoiders", "count or list the avoiders of a pattern set");
  std::string avoiders_patterns;
  int avoiders_n = 0;
  bool avoiders_list = false;
  avoiders_cmd->add_option("--patterns", avoiders_patterns, "comma-separated patterns")->required();
  avoiders_cmd->add_option("--n", avoiders_n, "permutation length")->required();
  avoiders_cmd->add_flag("--list", avoiders_list, "list the avoiders, one per line");

  auto* sequence_cmd = app.add_subcommand("sequence", "counting sequence of a pattern set");
  std::string sequence_patterns;
  int sequence_max_n = 9;
  bool sequence_identify = false;
  sequence_cmd->add_option("--patterns", sequence_patterns, "comma-separated patterns")->required();
  sequence_cmd->add_option("--max-n", sequence_max_n, "largest n (default 9)");
  sequence_cmd->add_flag("--identify", sequence_identify, "match against the sequence catalog");

  auto* classify_cmd = app.add_subcommand("classify", "symmetry and Wilf classification of k-subsets");
  int classify_k = 2;
  int classify_max_n = -1;
  classify_cmd->add_option("--k", classify_k, "subset size (1..12)")->required();
  classify_cmd->add_option("--max-n", classify_max_n, "largest n (default 9 for k <= 2, 8 beyond)");

  auto* verify_cmd = app.add_subcommand("verify", "check computed sequences against the bundled tables");
  std::string verify_table;
  int verify_k = 3;
  int verify_max_n = -1;
  verify_cmd->add_option("--table", verify_table, "singles, pairs or multi")->required();
  verify_cmd->add_option("--k", verify_k, "subset size for --table multi (default 3)");
  verify_cmd->add_option("--max-n", verify_max_n, "largest n (default 9; 8 for multi)");

  auto* bijection_cmd = app.add_subcommand("bijection", "apply one of the bijections");
  std::string bijection_name, bijection_perm, bijection_input;
  int bijection_n = -1;
  bijection_cmd
      ->add_option("--name", bijection_name,
                   "phi123, phi132, theta, psi-dyck, psi-comp, subset, binstring, lambda, smp")
      ->required();
  bijection_cmd->add_option("--perm", bijection_perm, "permutation to map forward");
  bijection_cmd->add_option("--input", bijection_input, "image to map back (with --inverse)");
  bijection_cmd->add_flag("--inverse", "apply the inverse map to --input");
  bijection_cmd->add_option("--n", bijection_n,
                            "ground size for subset/binstring inverses when ambiguous");

  auto* witness_cmd = app.add_subcommand("witness", "the unique avoider of {1-23, 3-21} ending n,1");
  int witness_n = 0;
  witness_cmd->add_option("--n", witness_n, "permutation length (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int exit_code = 0;

  if (*count_cmd) {
    out.command = "count";
    out.inputs = {{"pattern", count_pattern}, {"perm", count_perm}};
    const auto pattern = VincularPattern::parse(count_pattern);
    const auto host = Permutation::parse(count_perm);
    const auto occs = occurrences(pattern, host);
    out.text = std::to_string(occs.size()) + "\n";
    json list = json::array();
    for (const auto& occ : occs) {
      std::string letters, positions;
      for (size_t i = 0; i < occ.positions.size(); ++i) {
        if (i) positions += ',';
        positions += std::to_string(occ.positions[i]);
        if (host.size() <= 9)
          letters += static_cast<char>('0' + host.at(occ.positions[i]));
        else
          letters += (i ? "," : "") + std::to_string(host.at(occ.positions[i]));
      }
      if (count_list) out.text += letters + " " + positions + "\n";
      list.push_back(occ.positions);
    }
    out.results = {{"count", occs.size()}, {"occurrences", list}};
  } else if (*avoiders_cmd) {
    out.command = "avoiders";
    out.inputs = {{"patterns", avoiders_patterns}, {"n", avoiders_n}};
    const auto set = PatternSet::parse(avoiders_patterns);
    if (avoiders_list) {
      const auto avoiders = list_avoiders(set, avoiders_n);
      json list = json::array();
      for (const auto& p : avoiders) {
        out.text += p.str() + "\n";
        list.push_back(p.str());
      }
      out.results = {{"count", avoiders.size()}, {"avoiders", list}};
    } else {
      const long long count = count_avoiders(set, avoiders_n);
      out.text = std::to_string(count) + "\n";
      out.results = {{"count", count}};
    }
  } else if (*sequence_cmd) {
    out.command = "sequence";
    out.inputs = {{"patterns", sequence_patterns}, {"max_n", sequence_max_n}};
    const auto seq = counting_sequence(PatternSet::parse(sequence_patterns), sequence_max_n);
    out.text = seq.str() + "\n";
    out.results = {{"sequence", seq.counts}};
    if (sequence_identify) {
      const auto ids = identify(seq.counts);
      out.text += identifications_text(ids);
      out.results["identified_as"] = identifications_json(ids);
    }
  } else if (*classify_cmd) {
    out.command = "classify";
    if (classify_max_n < 0) classify_max_n = classify_k <= 2 ? 9 : 8;
    out.inputs = {{"k", classify_k}, {"max_n", classify_max_n}};
    const auto report = classify(classify_k, classify_max_n, threads);
    out.text = render_text(report);
    out.results = to_json(report);
  } else if (*verify_cmd) {
    out.command = "verify";
    if (verify_table == "singles" || verify_table == "pairs") {
      if (verify_max_n < 0) verify_max_n = 9;
      out.inputs = {{"table", verify_table}, {"max_n", verify_max_n}};
      const auto checks = verify_table == "singles" ? verify_singles(verify_max_n)
                                                    : verify_pairs(verify_max_n, threads);
      out.text = render_text(checks, verify_table);
      out.results = to_json(checks);
      for (const auto& check : checks)
        if (!check.pass) exit_code = 1;
    } else if (verify_table == "multi") {
      if (verify_max_n < 0) verify_max_n = 8;
      out.inputs = {{"table", verify_table}, {"k", verify_k}, {"max_n", verify_max_n}};
      const auto check = verify_multi(verify_k, verify_max_n, threads);
      out.text = render_text(check);
      out.results = to_json(check);
      if (!check.pass) exit_code = 1;
    } else {
      throw CLI::ValidationError("--table must be singles, pairs or multi");
    }
  } else if (*bijection_cmd) {
    out.command = "bijection";
    const bool inverse = bijection_cmd->count("--inverse") > 0;
    out.inputs = {{"name", bijection_name},
                  {"perm", bijection_perm},
                  {"input", bijection_input},
                  {"inverse", inverse}};
    if (!inverse && bijection_cmd->count("--perm") == 0)
      throw CLI::ValidationError("forward bijections need --perm");
    if (inverse && bijection_cmd->count("--input") == 0)
      throw CLI::ValidationError("--inverse needs --input");
    std::string result;
    const auto perm = [&] { return Permutation::parse(bijection_perm); };
    if (bijection_name == "phi123")
      result = inverse ? phi_123_inverse(SetPartition::parse(bijection_input)).str()
                       : phi_123(perm()).str();
    else if (bijection_name == "phi132")
      result = inverse ? phi_132_inverse(SetPartition::parse(bijection_input)).str()
                       : phi_132(perm()).str();
    else if (bijection_name == "theta")
      result = inverse ? theta(Permutation::parse(bijection_input)).str() : theta(perm()).str();
    else if (bijection_name == "psi-dyck")
      result = inverse ? perm_from_dyck_213(DyckWord(bijection_input)).str()
                       : psi_dyck_of_perm(perm()).str();
    else if (bijection_name == "psi-comp")
      result = inverse ? psi_comp_inverse(Composition::parse(bijection_input)).str()
                       : psi_comp(perm()).str();
    else if (bijection_name == "subset") {
      if (inverse) {
        if (bijection_n < 0) throw CLI::ValidationError("subset --inverse needs --n");
        result = subset_map_inverse(parse_subset(bijection_input, bijection_n)).str();
      } else {
        result = subset_map(perm()).str();
      }
    } else if (bijection_name == "binstring") {
      if (inverse) {
        BinarySequence b;
        b.bits = bijection_input;
        b.n = bijection_n >= 0 ? bijection_n : static_cast<int>(b.bits.size()) + 1;
        result = binstring_map_inverse(b).str();
      } else {
        result = binstring_map(perm()).bits;
      }
    } else if (bijection_name == "lambda")
      result = inverse ? lambda_map_inverse(Permutation::parse(bijection_input)).str()
                       : lambda_map(perm()).str();
    else if (bijection_name == "smp")
      result = inverse ? smp_map_inverse(SetPartition::parse(bijection_input)).str()
                       : smp_map(perm()).str();
    else
      throw CLI::ValidationError("unknown bijection '" + bijection_name + "'");
    out.text = result + "\n";
    out.results = {{"result", result}};
  } else if (*witness_cmd) {
    out.command = "witness";
    out.inputs = {{"n", witness_n}};
    const auto w = witness_perm(witness_n);
    out.text = w.str() + "\n";
    out.results = {{"perm", w.str()}};
  }

  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  out.emit(elapsed.count());
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
