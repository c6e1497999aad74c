// Batch interface over the toolkit: map classification, tuple searches,
// the full verdict-grid verification, and structure-constant counting.
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 domain
// refusal (e.g. a map that is not edge-transitive), 4 verdict-grid mismatch.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "etm/chartab.hpp"
#include "etm/search.hpp"

using namespace etm;

namespace {

constexpr const char* kToolVersion = "etm 1.0.0";

int run_classify(const std::string& mapfile) {
  FlagMap m = load_map_file(mapfile);
  ClassifyReport r;
  try {
    r = classify_report(m);
  } catch (const error& e) {
    std::string what = e.what();
    if (what.find("not edge-transitive") != std::string::npos) {
      std::cerr << what << "\n";
      return 3;
    }
    throw;
  }
  std::cout << "class " << class_label(r.cls) << "\n"
            << "vertices " << r.vertices << ", edges " << r.edges << ", faces "
            << r.faces << ", euler " << r.euler << "\n"
            << (r.orientable ? "orientable" : "non-orientable or with boundary")
            << ", boundary " << (r.boundary ? "yes" : "no") << "\n"
            << "automorphisms " << r.aut_order << "\n";
  return 0;
}

int run_search(const std::string& group, const std::string& cls_label,
               bool exhaustive, uint64_t budget, uint64_t seed, int jobs,
               const std::string& data_dir, const std::string& out_dir) {
  PermGroup g = resolve_group(group, data_dir);
  MapClass cls = class_from_label(cls_label);
  SearchOptions opt;
  opt.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Budgeted;
  opt.budget = budget;
  opt.seed = seed;
  opt.jobs = jobs;
  opt.max_witnesses = 4;
  ClassSearchResult r = search_class_tuples(g, cls, opt);
  std::cout << "group " << group << " (order " << g.order() << "), class "
            << cls_label << "\n"
            << (r.exhaustive ? "exhaustive" : "budgeted") << " scan: " << r.scanned
            << " tuples, " << r.generating << " generating, " << r.admissible
            << " admissible\n";
  if (cls == MapClass::C1 && r.exhaustive) std::cout << "m = " << r.generating << "\n";
  std::cout << "verdict: " << (r.admissible > 0 ? "REALIZED" : "NOT_REALIZED")
            << (r.exhaustive || r.admissible > 0 ? "" : " (not certified: budgeted)")
            << "\n";
  if (!out_dir.empty() && !r.witnesses.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
      std::string path = out_dir + "/witness_" + group + "_" + cls_label + "_" +
                         std::to_string(i) + ".json";
      save_tuple_file(r.witnesses[i], group, path);
      std::cout << "witness " << path << "\n";
    }
  }
  return 0;
}

int run_verify_table(const std::string& data_dir, uint64_t seed, int jobs,
                     const std::string& report_path) {
  TableReport report = verify_table(data_dir, seed, jobs);
  std::cout << report.to_text();
  if (!report_path.empty()) {
    std::string digest;
    for (const char* f : {"/groups/m11.json", "/groups/u3_3.json"})
      digest += std::to_string(file_digest(data_dir + f)) + " ";
    std::string witness_dir = report_path + ".witnesses";
    std::filesystem::create_directories(witness_dir);
    std::ofstream out(report_path);
    out << report.to_json_text(kToolVersion, digest, witness_dir);
    std::cout << "report written to " << report_path << " (witness tuples in "
              << witness_dir << ")\n";
  }
  return report.all_match ? 0 : 4;
}

int run_count(const std::string& table_path, const std::string& triple,
              bool oracle, const std::string& group,
              const std::string& data_dir) {
  CharacterTable tab = CharacterTable::load(table_path);
  auto first = triple.find(',');
  auto second = triple.rfind(',');
  if (first == std::string::npos || second == first)
    throw error("--classes expects three comma-separated labels");
  std::string a = triple.substr(0, first);
  std::string b = triple.substr(first + 1, second - first - 1);
  std::string c = triple.substr(second + 1);
  double residual = 0;
  uint64_t n = tab.frobenius_count(a, b, c, &residual);
  std::cout << "count(" << a << ", " << b << ", " << c << ") = " << n
            << "  (residual " << residual << ")\n";
  if (oracle) {
    if (group.empty())
      throw error("--oracle needs --group to supply a permutation realization");
    PermGroup g = resolve_group(group, data_dir);
    auto assign = match_classes_to_group(tab, g);
    if (!assign) throw error("no class correspondence between table and group");
    const auto& classes = g.conjugacy_classes();
    uint64_t brute = brute_force_count(
        g, classes[(*assign)[tab.class_index(a)]].members,
        classes[(*assign)[tab.class_index(b)]].members,
        classes[(*assign)[tab.class_index(c)]].members);
    std::cout << "oracle = " << brute << (brute == n ? "  (agrees)" : "  (DISAGREES)")
              << "\n";
    if (brute != n) return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-transitive maps toolkit"};
  app.set_version_flag("--version", kToolVersion);
  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "fixture directory");

  auto* classify_cmd = app.add_subcommand("classify", "classify a map file");
  std::string mapfile;
  classify_cmd->add_option("mapfile", mapfile)->required();

  auto* search_cmd = app.add_subcommand("search", "search class-realizing tuples");
  std::string group, cls_label, out_dir;
  bool exhaustive = false;
  uint64_t budget = 20000, seed = 1;
  int search_jobs = 1;
  search_cmd->add_option("--group", group)->required();
  search_cmd->add_option("--class", cls_label)->required();
  search_cmd->add_flag("--exhaustive", exhaustive);
  search_cmd->add_option("--budget", budget);
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--jobs", search_jobs, "shards for exhaustive scans");
  search_cmd->add_option("--out", out_dir, "directory for witness files");

  auto* table_cmd = app.add_subcommand("verify-table", "run the verdict grid");
  int jobs = 1;
  std::string report_path, roster = "default";
  uint64_t table_seed = 1;
  table_cmd->add_option("--jobs", jobs);
  table_cmd->add_option("--seed", table_seed);
  table_cmd->add_option("--report", report_path, "machine-readable report path");
  table_cmd->add_option("--roster", roster, "only 'default' is defined");

  auto* count_cmd = app.add_subcommand("count", "structure-constant counting");
  std::string table_path, triple, count_group;
  bool oracle = false;
  count_cmd->add_option("--table", table_path)->required();
  count_cmd->add_option("--classes", triple)->required();
  count_cmd->add_flag("--oracle", oracle);
  count_cmd->add_option("--group", count_group);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return run_classify(mapfile);
    if (*search_cmd)
      return run_search(group, cls_label, exhaustive, budget, seed, search_jobs,
                        data_dir, out_dir);
    if (*table_cmd) {
      if (roster != "default")
        throw error("unknown roster '" + roster + "' (only 'default' exists)");
      return run_verify_table(data_dir, table_seed, jobs, report_path);
    }
    if (*count_cmd)
      return run_count(table_path, triple, oracle, count_group, data_dir);
    std::cout << app.help();
    return 0;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
