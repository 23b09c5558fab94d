#include "catloc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "catloc/dsl.hpp"
#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

namespace catloc::suite {

namespace {

using namespace fixtures;

class Tally {
 public:
  void count(const std::string& key, std::size_t n = 1) {
    auto it = std::find_if(counts_.begin(), counts_.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == counts_.end()) {
      counts_.emplace_back(key, n);
    } else {
      it->second += n;
    }
  }
  std::size_t get(const std::string& key) const {
    for (const auto& [k, v] : counts_) {
      if (k == key) return v;
    }
    return 0;
  }
  void fail(const std::string& what) {
    if (!failure_) failure_ = what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void laws(const LawReport& r, const std::string& what) {
    count("law checks");
    if (!r.ok()) fail(what + ": " + r.violations.front().law + " at " + r.violations.front().where);
  }
  bool ok() const { return !failure_; }
  std::string detail() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < counts_.size(); ++k) out << (k ? ", " : "") << counts_[k].first << "=" << counts_[k].second;
    if (failure_) out << (counts_.empty() ? "" : "; ") << "first failure: " << *failure_;
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::size_t>> counts_;
  std::optional<std::string> failure_;
};

struct PosetCase {
  Poset poset;
  CategoryPtr cat;
  std::vector<Operator> closures;
};

std::vector<PosetCase> poset_cases(int max_size) {
  std::vector<PosetCase> out;
  for (int n = 1; n <= max_size; ++n) {
    for (auto& p : all_posets(n)) {
      auto cat = poset_category(p);
      out.push_back({p, cat, closure_operators(p)});
    }
  }
  return out;
}

std::string op_name(const Operator& op) {
  std::string s;
  for (int v : op) s += std::to_string(v);
  return s;
}

std::vector<std::string> cyclic_rings(const AbelianSkeleton& sk) {
  std::vector<std::string> out;
  for (Obj o : sk.category->objects()) {
    if (sk.factors(o).size() == 1) out.push_back("Z/" + std::to_string(sk.factors(o).front()));
  }
  return out;
}

/// One morphism per local class, for sweeps where only L_f matters.
std::vector<Mor> class_representatives(const FiniteCategory& cat) {
  std::vector<Mor> out;
  std::vector<ObjectSet> seen;
  for (Mor f : enumerate_test_morphisms(cat)) {
    auto cls = local_objects(cat, f);
    if (std::find(seen.begin(), seen.end(), cls) != seen.end()) continue;
    seen.push_back(cls);
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------

void law_suites(Tally& t, const SuiteOptions& o) {
  for (int mo : {4, 8}) {
    auto sk = abelian_skeleton(mo, o.budget);
    std::string where = "abelian(" + std::to_string(mo) + ")";
    t.laws(check_category(*sk.category), where);
    for (const auto& ring : cyclic_rings(sk)) {
      auto m = tensor_monad(sk, ring);
      t.laws(check_monad(m), where + " " + ring);
      auto em = eilenberg_moore(m, o.budget);
      t.laws(check_category(*em.category), where + " " + ring + " algebras");
      t.laws(check_adjunction(em.adjunction), where + " " + ring + " free-forgetful");
      t.count("monads");
    }
    t.count("categories");
  }
  auto gs = group_skeleton(8, o.budget);
  t.laws(check_category(*gs.category), "groups(8)");
  auto ab = abelianization_monad(gs);
  t.laws(check_monad(ab), "abelianization");
  t.expect(is_idempotent(ab), "abelianization is not idempotent");
  auto em = eilenberg_moore(ab, o.budget);
  t.laws(check_category(*em.category), "abelianization algebras");
  t.laws(check_adjunction(em.adjunction), "abelianization free-forgetful");
  t.count("categories");
  t.count("monads");

  auto cases = poset_cases(4);
  for (const auto& pc : cases) {
    std::string where = "poset " + pc.cat->name();
    t.laws(check_category(*pc.cat), where);
    t.count("categories");
    for (const auto& op : pc.closures) {
      auto m = closure_monad(pc.cat, op);
      t.laws(check_monad(m), where + " closure " + op_name(op));
      t.laws(check_localization(closure_localization(pc.cat, op)), where + " localization " + op_name(op));
      auto pem = eilenberg_moore(m, o.budget);
      t.laws(check_adjunction(pem.adjunction), where + " free-forgetful " + op_name(op));
      t.count("monads");
    }
    for (const auto& op : interior_operators(pc.poset)) {
      t.laws(check_colocalization(interior_colocalization(pc.cat, op)), where + " interior " + op_name(op));
    }
    if (is_lattice(*pc.cat)) {
      auto ls = lattice_structure(pc.cat);
      t.laws(check_adjunction(ls.join_diagonal), where + " join-diagonal");
      t.laws(check_adjunction(ls.diagonal_meet), where + " diagonal-meet");
      t.count("adjunctions", 2);
    }
  }
  for (const auto& p : cases) {
    if (p.poset.size > 3) continue;
    for (const auto& q : cases) {
      if (q.poset.size > 3) continue;
      for (const auto& adj : galois_connections(p.cat, q.cat)) {
        t.laws(check_adjunction(adj), "galois " + p.cat->name() + " -> " + q.cat->name());
        t.count("adjunctions");
      }
    }
  }
}

// ---------------------------------------------------------------------------

void check_comparison(Tally& t, const Functor& f, const Localization& l1, const Localization& l2,
                      const std::string& where) {
  t.count("instances");
  ComparisonResult r;
  try {
    r = compare(f, l1, l2);
  } catch (const TheoremViolation& e) {
    t.fail(where + ": " + e.what());
    return;
  }
  t.expect(r.alpha.has_value() == r.preserves_equivalences.holds, where + ": alpha existence");
  t.expect(r.beta.has_value() == r.preserves_locals.holds, where + ": beta existence");
  auto alphas = alpha_solutions(f, l1, l2, 2);
  t.expect(alphas.size() == (r.alpha ? 1u : 0u), where + ": alpha is not unique");
  if (r.alpha) {
    t.count("alpha");
    for (Obj x : f.source->objects()) {
      t.expect(l2.is_equivalence((*r.alpha)[x]), where + ": alpha component is not an equivalence");
    }
  }
  if (r.beta) t.count("beta");
  if (r.preserves_locals && r.preserves_equivalences) {
    t.count("positive");
    t.expect(r.mutually_inverse && r.naturally_isomorphic, where + ": alpha and beta are not inverse isomorphisms");
  } else {
    t.count("negative");
    t.expect(!r.naturally_isomorphic, where + ": natural isomorphism without both preservation properties");
  }
}

void comparison_maps(Tally& t, const SuiteOptions& o) {
  auto cases = poset_cases(3);
  for (const auto& p : cases) {
    for (const auto& q : cases) {
      for (const auto& adj : galois_connections(p.cat, q.cat)) {
        for (const auto& a : p.closures) {
          auto l1 = closure_localization(p.cat, a);
          for (const auto& b : q.closures) {
            auto l2 = closure_localization(q.cat, b);
            std::string where = p.cat->name() + "/" + q.cat->name() + " " + op_name(a) + "," + op_name(b);
            check_comparison(t, adj.left, l1, l2, "left adjoint " + where);
            check_comparison(t, adj.right, l2, l1, "right adjoint " + where);
          }
        }
      }
    }
  }
  auto sk = abelian_skeleton(4, o.budget);
  LocalizationCache cache(sk.category);
  auto reps = class_representatives(*sk.category);
  for (const char* ring : {"Z/2", "Z/3"}) {
    auto m = tensor_monad(sk, ring);
    for (Mor f : reps) {
      auto l1 = cache.localization(f);
      if (!l1) continue;
      for (Mor g : reps) {
        auto l2 = cache.localization(g);
        if (!l2) continue;
        t.count("tensor instances");
        check_comparison(t, m.functor, *l1, *l2,
                         std::string(ring) + " " + sk.category->name_of(f) + "," + sk.category->name_of(g));
      }
    }
  }
  t.expect(t.get("instances") >= 10, "fewer than 10 instances");
  t.expect(t.get("positive") >= 2, "fewer than 2 positive instances");
  t.expect(t.get("negative") >= 2, "fewer than 2 negative instances");
}

// ---------------------------------------------------------------------------

void tally_induced(Tally& t, const InducedLocalizationReport& r, const std::string& where) {
  t.count("instances");
  t.expect(r.agree(), where + ": conditions disagree (a=" + std::to_string(r.cond_a) + " b=" + std::to_string(r.cond_b) +
                          " c=" + std::to_string(r.cond_c) + " d=" + std::to_string(r.cond_d) + ")");
  if (r.cond_a && r.cond_b && r.cond_c && r.cond_d) t.count("all true");
  if (!r.cond_a && !r.cond_b && !r.cond_c && !r.cond_d) t.count("all false");
}

void induced_localization(Tally& t, const SuiteOptions& o) {
  for (const auto& pc : poset_cases(4)) {
    for (const auto& top : pc.closures) {
      auto em = eilenberg_moore(closure_monad(pc.cat, top), o.budget);
      for (const auto& lop : pc.closures) {
        auto r = evaluate_induced_conditions(em, closure_localization(pc.cat, lop), o.budget);
        tally_induced(t, r, "poset " + pc.cat->name() + " T=" + op_name(top) + " L=" + op_name(lop));
      }
    }
  }
  t.expect(t.get("all false") >= 1, "no instance with all four conditions false");
  auto sk = abelian_skeleton(8, o.budget);
  LocalizationCache cache(sk.category);
  for (const char* ring : {"Z/2", "Z/3"}) {
    auto em = eilenberg_moore(tensor_monad(sk, ring), o.budget);
    std::map<ObjectSet, InducedLocalizationReport> memo;
    for (Mor f : enumerate_test_morphisms(*sk.category)) {
      auto loc = cache.localization(f);
      if (!loc) {
        t.count("no localization");
        continue;
      }
      auto it = memo.find(loc->local_objects);
      if (it == memo.end()) it = memo.emplace(loc->local_objects, evaluate_induced_conditions(em, *loc, o.budget)).first;
      tally_induced(t, it->second, std::string(ring) + " " + sk.category->name_of(f));
    }
  }
}

// ---------------------------------------------------------------------------

void tensor_reading_sweep(Tally& t, const SuiteOptions& o) {
  auto sk = abelian_skeleton(8, o.budget);
  LocalizationCache cache(sk.category);
  const auto& cat = *sk.category;
  for (const char* ring : {"Z/2", "Z/3"}) {
    auto m = tensor_monad(sk, ring);
    auto em = eilenberg_moore(m, o.budget);
    for (Mor f : enumerate_test_morphisms(cat)) {
      if (sk.order(cat.source(f)) > 4 || sk.order(cat.target(f)) > 4) continue;
      if (!cache.localization(f) || !cache.localization(m(f))) {
        t.count("skipped");
        continue;
      }
      for (Obj mod : em.category->objects()) {
        std::string where = std::string(ring) + " " + cat.name_of(f) + " M=" + em.category->name_of(mod);
        try {
          auto r = tensor_readings(em, f, mod);
          t.count("readings");
          t.expect(r.coincide && r.to_module && r.to_underlying, where + ": readings differ");
        } catch (const Unsupported& e) {
          t.fail(where + ": " + e.what());
        }
      }
    }
  }
  t.expect(t.get("readings") > 0, "no readings computed");
}

// ---------------------------------------------------------------------------

void idempotent_sweep(Tally& t, const SuiteOptions& o) {
  auto gs = group_skeleton(8, o.budget);
  auto ab = abelianization_monad(gs);
  IdempotentCaseSweep sweep(ab);
  const auto& cat = *gs.category;
  for (Mor f : enumerate_test_morphisms(cat)) {
    IdempotentCaseReport r;
    try {
      r = sweep(f);
    } catch (const Unsupported&) {
      t.count("no localization");
      continue;
    } catch (const TheoremViolation& e) {
      t.fail(cat.name_of(f) + ": " + e.what());
      continue;
    }
    if (!r.lf_preserves_s) {
      t.count("does not preserve abelians");
      continue;
    }
    t.count("tested");
    t.expect(r.lfi_iso_ltfi.value_or(false), cat.name_of(f) + ": L_f A and L_(f_ab) A not compared or not isomorphic");
    for (const auto& [lf, ltf] : r.table) {
      t.expect(lf == ltf, cat.name_of(f) + ": " + cat.name_of(lf) + " vs " + cat.name_of(ltf));
    }
  }
  t.expect(t.get("tested") > 0, "no morphism tested");
}

// ---------------------------------------------------------------------------

void check_mates(Tally& t, const Adjunction& adj, const Localization& l1, const Localization& l2,
                 const std::string& where) {
  t.count("instances");
  try {
    auto alpha = left_comparison(adj, l1, l2);
    auto beta = right_comparison(adj, l1, l2);
    t.expect(alpha.has_value() == beta.has_value(), where + ": only one comparison exists");
    if (!alpha || !beta) return;
    t.count("with comparisons");
    auto mate = mate_of(*alpha, adj, l1, l2);
    t.expect(same_nat(mate, *beta), where + ": mate of alpha differs from beta");
    t.expect(same_nat(mate_inverse(mate, adj, l1, l2), *alpha), where + ": alpha does not survive the round trip");
    t.expect(same_nat(mate_of(mate_inverse(*beta, adj, l1, l2), adj, l1, l2), *beta),
             where + ": beta does not survive the round trip");
  } catch (const TheoremViolation& e) {
    t.fail(where + ": " + e.what());
  }
}

void mates_sweep(Tally& t, const SuiteOptions& o) {
  auto cases = poset_cases(3);
  for (const auto& p : cases) {
    for (const auto& q : cases) {
      for (const auto& adj : galois_connections(p.cat, q.cat)) {
        for (const auto& a : p.closures) {
          for (const auto& b : q.closures) {
            check_mates(t, adj, closure_localization(p.cat, a), closure_localization(q.cat, b),
                        "galois " + p.cat->name() + "/" + q.cat->name() + " " + op_name(a) + "," + op_name(b));
          }
        }
      }
    }
    if (!is_lattice(*p.cat)) continue;
    auto ls = lattice_structure(p.cat);
    for (const auto& a : p.closures) {
      for (const auto& b : p.closures) {
        auto square = product_localization(ls.square, closure_localization(p.cat, a), closure_localization(p.cat, b));
        for (const auto& c : p.closures) {
          auto single = closure_localization(p.cat, c);
          std::string ops = op_name(a) + "x" + op_name(b) + "," + op_name(c);
          check_mates(t, ls.join_diagonal, square, single, "join " + p.cat->name() + " " + ops);
          check_mates(t, ls.diagonal_meet, single, square, "meet " + p.cat->name() + " " + ops);
        }
      }
    }
  }
  auto sk = abelian_skeleton(4, o.budget);
  auto em = eilenberg_moore(tensor_monad(sk, "Z/2"), o.budget);
  LocalizationCache base(sk.category), algebras(em.category);
  for (Mor f : class_representatives(*sk.category)) {
    auto l1 = base.localization(f);
    if (!l1) continue;
    for (Mor g : class_representatives(*em.category)) {
      auto l2 = algebras.localization(g);
      if (!l2) continue;
      t.count("free-forgetful instances");
      check_mates(t, em.adjunction, *l1, *l2, "free Z/2 " + sk.category->name_of(f) + "," + em.category->name_of(g));
    }
  }
}

// ---------------------------------------------------------------------------

void colimit_sweep(Tally& t, const SuiteOptions&) {
  for (const auto& pc : poset_cases(4)) {
    if (!is_lattice(*pc.cat)) continue;
    t.count("lattices");
    const auto& objs = pc.cat->objects();
    for (const auto& op : pc.closures) {
      auto loc = closure_localization(pc.cat, op);
      for (std::size_t mask = 1; mask < (std::size_t{1} << objs.size()); ++mask) {
        std::vector<Obj> diagram;
        for (std::size_t k = 0; k < objs.size(); ++k) {
          if (mask & (std::size_t{1} << k)) diagram.push_back(objs[k]);
        }
        auto r = colimit_comparison(*pc.cat, loc, diagram);
        t.count("diagrams");
        t.expect(r.local_of_join_of_local == r.local_of_join && r.is_equivalence,
                 "lattice " + pc.cat->name() + " " + op_name(op) + " diagram " + std::to_string(mask));
      }
    }
  }
}

// ---------------------------------------------------------------------------

void transport_sweep(Tally& t, const CategoryPtr& cat, const std::string& where) {
  for (Obj a : cat->objects()) {
    auto direct = build_cellularization(cat, a);
    auto transported = transported_cellularization(cat, a);
    t.count("cellularizations");
    if (direct) t.count("existing");
    t.expect(direct.has_value() == transported.has_value() && (!direct || same_colocalization(*direct, *transported)),
             where + " " + cat->name_of(a) + ": direct and transported cellularization differ");
  }
}

void tally_coinduced(Tally& t, const CoInducedReport& r, const std::string& where) {
  t.count("co-induced instances");
  t.expect(r.agree(), where + ": co-induced conditions disagree (a=" + std::to_string(r.cond_a) +
                          " b=" + std::to_string(r.cond_b) + " c=" + std::to_string(r.cond_c) +
                          " d=" + std::to_string(r.cond_d) + ")");
  if (!r.cond_a && !r.cond_b && !r.cond_c && !r.cond_d) t.count("co-induced all false");
}

void duality_sweep(Tally& t, const SuiteOptions& o) {
  auto cases = poset_cases(4);
  for (const auto& pc : cases) transport_sweep(t, pc.cat, "poset");
  auto ab4 = abelian_skeleton(4, o.budget);
  auto ab8 = abelian_skeleton(8, o.budget);
  transport_sweep(t, ab4.category, "abelian(4)");
  transport_sweep(t, ab8.category, "abelian(8)");
  transport_sweep(t, group_skeleton(8, o.budget).category, "groups(8)");

  for (const auto& pc : cases) {
    auto interiors = interior_operators(pc.poset);
    for (const auto& top : pc.closures) {
      auto em = eilenberg_moore(closure_monad(pc.cat, top), o.budget);
      for (const auto& cop : interiors) {
        tally_coinduced(t, evaluate_coinduced_conditions(em, interior_colocalization(pc.cat, cop), o.budget),
                        "poset " + pc.cat->name() + " T=" + op_name(top) + " C=" + op_name(cop));
      }
    }
  }
  t.expect(t.get("co-induced all false") >= 1, "no co-induced instance with all four conditions false");
  for (const AbelianSkeleton* sk : {&ab4, &ab8}) {
    for (const char* ring : {"Z/2", "Z/3"}) {
      auto em = eilenberg_moore(tensor_monad(*sk, ring), o.budget);
      for (Obj a : sk->category->objects()) {
        auto col = build_cellularization(sk->category, a);
        if (!col) continue;
        tally_coinduced(t, evaluate_coinduced_conditions(em, *col, o.budget),
                        std::string(ring) + " " + sk->category->name() + " " + sk->category->name_of(a));
      }
    }
  }

  const auto& cat = *ab8.category;
  for (const char* ring : {"Z/2", "Z/3"}) {
    auto m = tensor_monad(ab8, ring);
    auto em = eilenberg_moore(m, o.budget);
    for (Obj a : cat.objects()) {
      if (ab8.order(a) > 4) continue;
      try {
        cellular_free_image_theorem(em, a);
        t.count("cellular free image");
      } catch (const TheoremViolation& e) {
        t.fail(std::string(ring) + " " + cat.name_of(a) + ": " + e.what());
      }
      if (!build_cellularization(ab8.category, a) || !build_cellularization(ab8.category, m(a))) {
        t.count("readings skipped");
        continue;
      }
      for (Obj mod : em.category->objects()) {
        std::string where = std::string(ring) + " A=" + cat.name_of(a) + " M=" + em.category->name_of(mod);
        try {
          auto r = cellular_readings(em, a, mod);
          t.count("cellular readings");
          t.expect(r.coincide, where + ": cellular readings differ");
        } catch (const Unsupported& e) {
          t.fail(where + ": " + e.what());
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

void dsl_sweep(Tally& t, const SuiteOptions& o) {
  std::vector<std::string> docs = builtin_documents();
  docs.insert(docs.end(), o.extra_documents.begin(), o.extra_documents.end());
  for (std::size_t k = 0; k < docs.size(); ++k) {
    std::string where = "document " + std::to_string(k);
    dsl::Document doc;
    try {
      doc = dsl::parse(docs[k]);
    } catch (const dsl::SyntaxError& e) {
      t.fail(where + ": " + e.what());
      continue;
    }
    std::string printed = dsl::print(doc);
    t.count("documents");
    t.expect(printed == docs[k], where + ": print(parse(text)) is not byte-identical");
    t.expect(dsl::parse(printed) == doc, where + ": parse(print(doc)) differs from doc");
    dsl::RunOptions single;
    single.budget = o.budget;
    dsl::RunOptions parallel = single;
    parallel.workers = std::max(4u, o.workers);
    parallel.seed = 0x5eed;
    auto a = dsl::run(doc, single);
    auto b = dsl::run(doc, parallel);
    t.expect(a.structured() == b.structured(), where + ": report depends on the worker count");
    t.expect(a.text() == b.text(), where + ": text report depends on the worker count");
    if (k < builtin_documents().size()) t.expect(a.exit_code() == 0, where + ": built-in document does not run clean");
  }
}

const char* const kTitles[kCriteria] = {
    "law suites on every fixture",
    "comparison maps against preservation predicates",
    "induced localization conditions agree",
    "tensor readings coincide",
    "idempotent case for abelianization",
    "mates and their inverses",
    "colimit comparison on lattices",
    "duality: transport, co-induced conditions, cellular readings",
    "dsl round trip and report determinism",
};

using Runner = void (*)(Tally&, const SuiteOptions&);
const Runner kRunners[kCriteria] = {law_suites,     comparison_maps, induced_localization,
                                    tensor_reading_sweep, idempotent_sweep, mates_sweep,
                                    colimit_sweep,  duality_sweep,   dsl_sweep};

}  // namespace

const std::vector<std::string>& builtin_documents() {
  static const std::vector<std::string> docs = {
      "",
      R"(category P3 {
  objects: 0, 1, 2;
  morphisms: 0_1: 0 -> 1, 0_2: 0 -> 2, 1_2: 1 -> 2;
  compose: 1_2.0_1 = 0_2;
}

task localize(category=P3, f=1->2);
task check(target=P3);
)",
      R"(fixture abelian(max_order=4) as Ab;

fixture tensor(category=Ab, ring=Z/2) as T;

task verify(theorem=induced, monad=T, f=Z4->Z2);
task verify(theorem=free_image, monad=T, f=Z4->Z2);
task verify(theorem=readings, monad=T, f=Z4->Z2);
task verify(theorem=cellular_readings, monad=T, object=Z2);
task induce(monad=T, f=Z2->Z4);
)",
      R"(fixture groups(max_order=6) as G;

fixture abelianization(category=G) as Ab;

task verify(theorem=idempotent, monad=Ab, f=S3->Z2);
task check(target=Ab);
task dualize(category=G, object=Z2);
)",
      R"(category P2 {
  objects: 0, 1;
  morphisms: 0_1: 0 -> 1;
}

category Q {
  objects: s;
}

functor F: P2 -> Q {
  objects: 0 -> s, 1 -> s;
  morphisms: 0_1 -> id_s;
}

functor G: Q -> P2 {
  objects: s -> 1;
}

nat eta: Id_P2 => G.F {
  components: 0: 0_1, 1: id_1;
}

nat eps: F.G => Id_Q {
  components: s: id_s;
}

adjunction A = (F, G, eta, eps);

functor T: P2 -> P2 {
  objects: 0 -> 1, 1 -> 1;
  morphisms: 0_1 -> id_1;
}

nat unit: Id_P2 => T {
  components: 0: 0_1, 1: id_1;
}

nat mu: T.T => T {
  components: 0: id_1, 1: id_1;
}

monad M = (T, unit, mu);

task check(target=A);
task check(target=M);
task verify(theorem=mates, adjunction=A, source=0_1, target=id_s);
task compare(functor=G, source=id_s, target=0_1);
task verify(theorem=coinduced, monad=M, object=1);
)",
  };
  return docs;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > kCriteria) throw UnknownId("no acceptance criterion " + std::to_string(id));
  r.title = kTitles[id - 1];
  auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    kRunners[id - 1](t, options);
  } catch (const Error& e) {
    t.fail(std::string("unexpected error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = t.ok();
  r.detail = t.detail();
  if (options.on_result) options.on_result(r);
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace catloc::suite
