// One line per acceptance criterion; exit status 0 only when all pass.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catloc/suite.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  fs::path golden = argc > 1 ? fs::path(argv[1]) : fs::path(CATLOC_GOLDEN_DIR);
  catloc::suite::SuiteOptions opts;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(golden))
    if (e.path().extension() == ".cat") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    opts.extra_documents.push_back(s.str());
  }

  int passed = 0;
  opts.on_result = [&](const catloc::suite::CriterionResult& r) {
    passed += r.passed;
    std::printf("criterion %d: %s  %s  (%s; %.1fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  };
  catloc::suite::run_suite(opts);
  std::printf("%d/%d criteria passed\n", passed, catloc::suite::kCriteria);
  return passed == catloc::suite::kCriteria ? 0 : 1;
}
