// catloc: check and run DSL documents, emit fixtures, run the acceptance suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catloc/dsl.hpp"
#include "catloc/suite.hpp"

namespace {

constexpr int kUsage = 64;

struct Globals {
  std::string format = "text";
  std::optional<std::size_t> max_objects;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool timing = false;

  catloc::Budget budget() const {
    auto b = catloc::Budget::from_environment();
    if (max_objects) b.max_objects = *max_objects;
    return b;
  }
  bool structured() const { return format == "structured"; }
};

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_file(const Globals& g, const std::string& path, bool check_only) {
  auto text = slurp(path);
  if (!text) {
    std::cerr << "catloc: cannot read " << path << "\n";
    return catloc::dsl::exit_code(catloc::dsl::Status::input_error);
  }
  catloc::dsl::RunOptions o;
  o.budget = g.budget();
  o.workers = g.workers;
  o.seed = g.seed;
  o.timing = g.timing;
  o.check_only = check_only;
  auto report = catloc::dsl::run_text(*text, o);
  std::cout << (g.structured() ? report.structured() : report.text());
  return report.exit_code();
}

struct FixtureArgs {
  std::string name;
  int max_order = 0;
  int chain = 0;
  int antichain = 0;
  std::string ring = "Z/2";
  std::vector<std::string> map;
  bool emit = false;
};

std::string descriptor(const FixtureArgs& f) {
  auto order = [&](int fallback) { return std::to_string(f.max_order ? f.max_order : fallback); };
  auto poset = [&] {
    if (f.antichain) return "fixture poset(shape=antichain, size=" + std::to_string(f.antichain) + ") as P;\n";
    return "fixture poset(shape=chain, size=" + std::to_string(f.chain ? f.chain : 3) + ") as P;\n";
  };
  if (f.name == "abelian") return "fixture abelian(max_order=" + order(4) + ") as Ab;\n";
  if (f.name == "groups") return "fixture groups(max_order=" + order(8) + ") as G;\n";
  if (f.name == "poset") return poset();
  if (f.name == "tensor") {
    return "fixture abelian(max_order=" + order(4) + ") as Ab;\nfixture tensor(category=Ab, ring=" + f.ring + ") as T;\n";
  }
  if (f.name == "abelianization") {
    return "fixture groups(max_order=" + order(8) + ") as G;\nfixture abelianization(category=G) as Ab;\n";
  }
  std::string list;
  for (const auto& m : f.map) list += (list.empty() ? "" : ", ") + m;
  return poset() + "fixture closure(category=P, map=[" + list + "]) as K;\n";
}

int fixtures(const Globals& g, const FixtureArgs& f) {
  try {
    auto doc = catloc::dsl::parse(descriptor(f));
    std::cout << catloc::dsl::print(f.emit ? catloc::dsl::emit_fixtures(doc, g.budget()) : doc);
    return 0;
  } catch (const catloc::BudgetExceeded& e) {
    std::cerr << "catloc: " << e.what() << "\n";
    return catloc::dsl::exit_code(catloc::dsl::Status::budget_exceeded);
  } catch (const catloc::Error& e) {
    std::cerr << "catloc: " << e.what() << "\n";
    return catloc::dsl::exit_code(catloc::dsl::Status::input_error);
  }
}

int suite(const Globals& g, const std::vector<int>& criteria, const std::string& golden) {
  catloc::suite::SuiteOptions o;
  o.budget = g.budget();
  o.workers = g.workers;
  if (!golden.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(golden)) {
      if (e.path().extension() == ".cat") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) o.extra_documents.push_back(slurp(p.string()).value_or(""));
  }
  if (!g.structured()) {
    o.on_result = [](const catloc::suite::CriterionResult& r) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.detail << ")"
                << std::endl;
    };
  }
  std::vector<catloc::suite::CriterionResult> results;
  if (criteria.empty()) {
    results = catloc::suite::run_suite(o);
  } else {
    for (int id : criteria) results.push_back(catloc::suite::run_criterion(id, o));
  }
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (g.structured()) {
    nlohmann::ordered_json doc = {{"schema_version", catloc::dsl::kSchemaVersion}, {"passed", all}};
    doc["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      doc["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                                 {"seconds", r.seconds}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::size_t passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    std::cout << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localizations, comparison maps and their duals on finite categories"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-objects", g.max_objects, "Object budget (overrides CATLOC_MAX_OBJECTS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Worker threads for independent tasks")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Task scheduling seed; results do not depend on it");
  app.add_flag("--timing", g.timing, "Add per-task wall time to reports");

  std::string file;
  auto* check = app.add_subcommand("check", "Parse a document and law-check its declarations");
  check->add_option("file", file, "DSL document")->required();
  auto* run = app.add_subcommand("run", "Run every task of a document");
  run->add_option("file", file, "DSL document")->required();

  FixtureArgs fx;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Print a fixture descriptor, or the fixture itself with --emit");
  fixtures_cmd->add_option("name", fx.name, "Fixture kind")
      ->required()
      ->check(CLI::IsMember({"abelian", "groups", "poset", "tensor", "abelianization", "closure"}));
  fixtures_cmd->add_option("--max-order", fx.max_order, "Largest group order")->check(CLI::PositiveNumber);
  auto* chain = fixtures_cmd->add_option("--chain", fx.chain, "Chain with N elements")->check(CLI::PositiveNumber);
  fixtures_cmd->add_option("--antichain", fx.antichain, "Antichain with N elements")
      ->check(CLI::PositiveNumber)
      ->excludes(chain);
  fixtures_cmd->add_option("--ring", fx.ring, "Coefficient ring Z/k of the tensor monad");
  fixtures_cmd->add_option("--map", fx.map, "Closure operator as the list of images")->delimiter(',');
  fixtures_cmd->add_flag("--emit", fx.emit, "Expand into explicit declarations");

  std::vector<int> criteria;
  std::string golden;
  auto* suite_cmd = app.add_subcommand("suite", "Run the built-in acceptance suite");
  suite_cmd->add_option("--criterion", criteria, "Only these criteria")->check(CLI::Range(1, catloc::suite::kCriteria));
  suite_cmd->add_option("--golden", golden, "Directory of extra .cat documents for the round-trip check")
      ->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (fx.name == "closure" && fx.map.empty()) {
    std::cerr << "catloc: fixtures closure needs --map\n";
    return kUsage;
  }
  if (*check) return run_file(g, file, true);
  if (*run) return run_file(g, file, false);
  if (*fixtures_cmd) return fixtures(g, fx);
  return suite(g, criteria, golden);
}
