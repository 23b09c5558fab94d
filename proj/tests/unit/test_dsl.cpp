#include "catch_amalgamated.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catloc/dsl.hpp"

using namespace catloc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> golden_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CATLOC_GOLDEN_DIR))
    if (e.path().extension() == ".cat") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kChain = R"(category P3 {
  objects: 0, 1, 2;
  morphisms: 0_1: 0 -> 1, 0_2: 0 -> 2, 1_2: 1 -> 2;
  compose: 1_2.0_1 = 0_2;
}

task localize(category=P3, f=1->2);
)";

}  // namespace

TEST_CASE("empty documents") {
  auto doc = dsl::parse("");
  CHECK(doc.declarations.empty());
  CHECK(doc.tasks.empty());
  CHECK(dsl::print(doc).empty());
  CHECK(dsl::parse("  # only a comment\n\n") == doc);
  auto r = dsl::run(doc);
  CHECK(r.exit_code() == 0);
  CHECK(r.document["schema_version"] == dsl::kSchemaVersion);
}

TEST_CASE("the chain document parses to one category and one task") {
  auto doc = dsl::parse(kChain);
  REQUIRE(doc.declarations.size() == 1);
  REQUIRE(doc.tasks.size() == 1);
  const auto& c = std::get<dsl::CategoryDecl>(doc.declarations[0]);
  CHECK(c.name == "P3");
  CHECK(c.objects == std::vector<std::string>{"0", "1", "2"});
  CHECK(c.composites.size() == 1);
  const auto* f = doc.tasks[0].arg("f");
  REQUIRE(f);
  CHECK(f->kind == dsl::Term::Kind::arrow);
  CHECK(dsl::print(*f) == "1->2");
  CHECK(dsl::print(doc) == kChain);
}

TEST_CASE("localize reports the reflection table") {
  auto r = dsl::run_text(kChain);
  REQUIRE(r.exit_code() == 0);
  const auto& res = r.document["tasks"][0]["result"];
  CHECK(res["exists"] == true);
  CHECK(res["generator"] == "1_2");
  const auto& table = res["table"];
  REQUIRE(table.size() == 3);
  CHECK(table[0]["local"] == "0");
  CHECK(table[1]["local"] == "2");
  CHECK(table[2]["local"] == "2");
  CHECK(table[1]["unit"] == "1_2");
}

TEST_CASE("syntax errors carry positions") {
  try {
    dsl::parse("category P {\n  objects 0;\n}\n");
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& e) {
    CHECK(e.position.line == 2);
    CHECK(e.position.column > 0);
  }
  CHECK_THROWS_AS(dsl::parse("task check(target=P"), dsl::SyntaxError);
  CHECK_THROWS_AS(dsl::parse("task nonsense(x=1);"), dsl::SyntaxError);
  CHECK_THROWS_AS(dsl::parse("task check(target=P, target=Q);"), dsl::SyntaxError);
  CHECK_THROWS_AS(dsl::parse("fixture abelian(size=3) as A;"), dsl::SyntaxError);

  auto r = dsl::run_text("category P {\n  objects 0;\n}\n");
  CHECK(r.status == dsl::Status::input_error);
  CHECK(r.exit_code() == 3);
  CHECK(r.document["error"]["line"] == 2);
}

TEST_CASE("resolution errors") {
  const char* missing = R"(category P3 {
  objects: 0, 1, 2;
  morphisms: 0_1: 0 -> 1, 1_2: 1 -> 2, 0_2: 0 -> 2;
}
)";
  try {
    dsl::resolve(dsl::parse(missing));
    FAIL("expected a resolve error");
  } catch (const dsl::ResolveError& e) {
    CHECK(std::string(e.what()).find("missing composite (1_2,0_1)") != std::string::npos);
    CHECK(e.position.line >= 1);
  }
  CHECK_THROWS_AS(dsl::resolve(dsl::parse("category P {\n  objects: 0;\n  morphisms: f: 0 -> 1;\n}\n")),
                  dsl::ResolveError);
  const char* mistyped = R"(category P {
  objects: 0, 1;
  morphisms: f: 0 -> 1, g: 0 -> 1;
  compose: g.f = f;
}
)";
  CHECK_THROWS_AS(dsl::resolve(dsl::parse(mistyped)), dsl::ResolveError);
  CHECK_THROWS_AS(dsl::resolve(dsl::parse("fixture tensor(category=Nope, ring=Z/2) as T;")), dsl::ResolveError);
  CHECK(dsl::run_text("task check(target=Nowhere);").exit_code() == 3);
}

TEST_CASE("fixture declarations print with every parameter") {
  auto doc = dsl::parse("fixture poset(chain=3) as P;");
  CHECK(dsl::print(doc) == "fixture poset(shape=chain, size=3) as P;\n");
  auto ab = dsl::parse("fixture abelian() as A;");
  CHECK(dsl::print(ab) == "fixture abelian(max_order=4) as A;\n");
}

TEST_CASE("print is idempotent on loosely formatted input") {
  const char* loose =
      "category   C{objects:a,b;morphisms:f:a->b}\n"
      "functor F : C -> C { objects: a -> a, b -> b; morphisms: f -> f }\n"
      "task check(C);  task localize(C, f);\n";
  auto doc = dsl::parse(loose);
  std::string once = dsl::print(doc);
  CHECK(dsl::parse(once) == doc);
  CHECK(dsl::print(dsl::parse(once)) == once);
}

TEST_CASE("fixtures expand into explicit declarations") {
  auto doc = dsl::parse("fixture poset(chain=3) as P;\nfixture closure(category=P, map=[0, 2, 2]) as K;\n");
  auto expanded = dsl::emit_fixtures(doc);
  auto env = dsl::resolve(expanded);
  CHECK(env.category("P", {})->morphism_count() == 6);
  CHECK(env.monad("K", {}).functor(Obj{1}) == Obj{2});
  auto r = dsl::run(expanded);
  CHECK(r.exit_code() == 0);
  for (const auto& d : r.document["declarations"]) CHECK(d["ok"] == true);
  CHECK(dsl::parse(dsl::print(expanded)) == expanded);
}

TEST_CASE("law failures in declarations set the exit code") {
  const char* broken = R"(category C {
  objects: a;
  morphisms: s: a -> a, t: a -> a;
  compose: s.s = t, s.t = t, t.s = s, t.t = t;
}
)";
  auto r = dsl::run_text(broken);
  CHECK(r.status == dsl::Status::law_failure);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("golden corpus round-trips byte for byte and runs clean") {
  auto files = golden_files();
  REQUIRE(files.size() >= 5);
  for (const auto& p : files) {
    INFO(p.filename().string());
    std::string text = slurp(p);
    auto doc = dsl::parse(text);
    REQUIRE(dsl::print(doc) == text);
    REQUIRE(dsl::parse(dsl::print(doc)) == doc);
    dsl::RunOptions one;
    dsl::RunOptions many;
    many.workers = 4;
    many.seed = 7;
    auto a = dsl::run(doc, one);
    auto b = dsl::run(doc, many);
    CHECK(a.exit_code() == 0);
    CHECK(a.structured() == b.structured());
    CHECK(a.text() == b.text());
  }
}

TEST_CASE("timing is reported only on request") {
  dsl::RunOptions opts;
  auto plain = dsl::run_text(kChain, opts);
  CHECK_FALSE(plain.document["tasks"][0].contains("elapsed_ms"));
  opts.timing = true;
  auto timed = dsl::run_text(kChain, opts);
  CHECK(timed.document["tasks"][0].contains("elapsed_ms"));
}

TEST_CASE("budget errors map to their own exit code") {
  dsl::RunOptions opts;
  opts.budget.max_objects = 2;
  auto r = dsl::run_text("fixture abelian(max_order=8) as A;", opts);
  CHECK(r.status == dsl::Status::budget_exceeded);
  CHECK(r.exit_code() == 4);
}
