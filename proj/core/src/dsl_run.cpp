#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "catloc/dsl.hpp"

namespace catloc::dsl {

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  Status status = Status::ok;
  json body = json::object();
};

int severity(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::unsupported: return 1;
    case Status::law_failure: return 2;
    case Status::budget_exceeded: return 3;
    case Status::input_error: return 4;
    case Status::theorem_violation: return 5;
  }
  return 0;
}

Status worst(Status a, Status b) { return severity(a) >= severity(b) ? a : b; }

json violations(const LawReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back({{"law", v.law}, {"where", v.where}});
  return out;
}

Outcome law_outcome(const char* kind, const LawReport& r) {
  Outcome o;
  o.body = {{"kind", kind}, {"ok", r.ok()}, {"violations", violations(r)}};
  if (!r.ok()) o.status = Status::law_failure;
  return o;
}

json predicate(const PredicateResult& p, const FiniteCategory& cat) {
  json w = nullptr;
  if (p.object_witness) w = cat.name_of(*p.object_witness);
  if (p.morphism_witness) w = cat.name_of(*p.morphism_witness);
  return {{"holds", p.holds}, {"witness", w}};
}

json nat_table(const std::optional<NatTransform>& t) {
  if (!t) return nullptr;
  json out = json::array();
  const auto& dom = *t->source.source;
  for (Obj x : dom.objects()) out.push_back({{"object", dom.name_of(x)}, {"component", t->target.target->name_of((*t)[x])}});
  return out;
}

json object_list(const FiniteCategory& cat, const ObjectSet& s) {
  json out = json::array();
  for (Obj o : s.members()) out.push_back(cat.name_of(o));
  return out;
}

json localization_json(const std::optional<Localization>& loc) {
  if (!loc) return {{"exists", false}, {"flag", "no localization"}};
  const auto& cat = *loc->category;
  json table = json::array();
  for (Obj x : cat.objects()) {
    table.push_back({{"object", cat.name_of(x)}, {"local", cat.name_of((*loc)(x))}, {"unit", cat.name_of(loc->unit[x])}});
  }
  return {{"exists", true}, {"local_objects", object_list(cat, loc->local_objects)}, {"table", table}};
}

json colocalization_json(const std::optional<Colocalization>& col) {
  if (!col) return {{"exists", false}, {"flag", "no colocalization"}};
  const auto& cat = *col->category;
  json table = json::array();
  for (Obj x : cat.objects()) {
    table.push_back(
        {{"object", cat.name_of(x)}, {"colocal", cat.name_of((*col)(x))}, {"counit", cat.name_of(col->counit[x])}});
  }
  return {{"exists", true}, {"colocal_objects", object_list(cat, col->colocal_objects)}, {"table", table}};
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

class TaskRunner {
 public:
  TaskRunner(const Environment& env, const RunOptions& options) : env_(env), options_(options) {}

  Outcome operator()(const Task& t) const {
    const std::string& name = t.name;
    if (name == "check") return check(t);
    if (name == "localize") return localize(t);
    if (name == "compare") return compare_task(t);
    if (name == "induce") return induced(t);
    if (name == "dualize") return dualize(t);
    const std::string& statement = t.arg("theorem")->text;
    if (statement == "induced") return induced(t);
    if (statement == "free_image") return free_image(t);
    if (statement == "idempotent") return idempotent(t);
    if (statement == "readings") return readings(t);
    if (statement == "coinduced") return coinduced(t);
    if (statement == "cellular") return cellular(t);
    if (statement == "cellular_readings") return cellular_readings_task(t);
    return mates(t);
  }

 private:
  const Term& arg(const Task& t, const char* key) const {
    const Term* v = t.arg(key);
    if (!v) throw ResolveError(t.position, "task " + t.name + " needs '" + key + "'");
    return *v;
  }
  const std::string& name_arg(const Task& t, const char* key) const {
    const Term& v = arg(t, key);
    if (v.kind != Term::Kind::name) throw ResolveError(t.position, std::string("'") + key + "' must be a name");
    return v.text;
  }

  Outcome check(const Task& t) const {
    const Entity& e = env_.at(name_arg(t, "target"), t.position);
    if (auto c = std::get_if<CategoryPtr>(&e)) return law_outcome("category", check_category(**c));
    if (auto f = std::get_if<Functor>(&e)) return law_outcome("functor", check_functor(*f));
    if (auto n = std::get_if<NatTransform>(&e)) return law_outcome("nat", check_nat(*n));
    if (auto m = std::get_if<Monad>(&e)) return law_outcome("monad", check_monad(*m));
    return law_outcome("adjunction", check_adjunction(std::get<Adjunction>(e)));
  }

  Outcome localize(const Task& t) const {
    CategoryPtr cat = env_.category(name_arg(t, "category"), t.position);
    Mor f = resolve_morphism(*cat, arg(t, "f"), t.position);
    Outcome o;
    o.body = {{"generator", cat->name_of(f)}};
    o.body.update(localization_json(build_localization(cat, f)));
    return o;
  }

  Outcome compare_task(const Task& t) const {
    const Functor& f = env_.functor(name_arg(t, "functor"), t.position);
    Mor a = resolve_morphism(*f.source, arg(t, "source"), t.position);
    Mor b = resolve_morphism(*f.target, arg(t, "target"), t.position);
    auto l1 = build_localization(f.source, a);
    auto l2 = build_localization(f.target, b);
    Outcome o;
    o.body = {{"source_generator", f.source->name_of(a)}, {"target_generator", f.target->name_of(b)}};
    if (!l1 || !l2) {
      o.status = Status::unsupported;
      o.body["flag"] = !l1 ? "no localization on the source" : "no localization on the target";
      return o;
    }
    auto r = compare(f, *l1, *l2);
    o.body["preserves_local_objects"] = predicate(r.preserves_locals, *f.source);
    o.body["preserves_equivalences"] = predicate(r.preserves_equivalences, *f.source);
    o.body["alpha"] = nat_table(r.alpha);
    o.body["beta"] = nat_table(r.beta);
    o.body["alpha_is_iso"] = r.alpha_is_iso;
    o.body["beta_is_iso"] = r.beta_is_iso;
    o.body["naturally_isomorphic"] = r.naturally_isomorphic;
    o.body["mutually_inverse"] = r.mutually_inverse;
    return o;
  }

  struct MonadAndMorphism {
    const Monad* monad;
    EMCategory em;
    Mor f;
  };

  MonadAndMorphism monad_and_morphism(const Task& t) const {
    const Monad& m = env_.monad(name_arg(t, "monad"), t.position);
    Mor f = resolve_morphism(*m.category(), arg(t, "f"), t.position);
    return {&m, eilenberg_moore(m, options_.budget), f};
  }

  Outcome induced(const Task& t) const {
    auto [m, em, f] = monad_and_morphism(t);
    const auto& cat = *m->category();
    auto loc = build_localization(m->category(), f);
    Outcome o;
    o.body = {{"generator", cat.name_of(f)}, {"algebras", em.algebras.size()}};
    if (!loc) {
      o.status = Status::unsupported;
      o.body["flag"] = "no localization";
      return o;
    }
    auto r = induce_localization(em, *loc, options_.budget);
    o.body["conditions"] = {{"a", r.cond_a}, {"b", r.cond_b}, {"c", r.cond_c}, {"d", r.cond_d}};
    o.body["agree"] = r.agree();
    o.body["a_witness"] = predicate(r.a_witness, cat);
    o.body["b_witness"] = r.b_witness ? json(em.category->name_of(*r.b_witness)) : json(nullptr);
    o.body["induced"] = localization_json(r.induced);
    o.body["classes_examined"] = r.classes_examined;
    return o;
  }

  Outcome free_image(const Task& t) const {
    auto [m, em, f] = monad_and_morphism(t);
    auto r = free_image_theorem(em, f);
    Outcome o;
    o.body = {{"generator", m->category()->name_of(f)},
              {"testable", r.testable},
              {"untestable", r.untestable},
              {"t_preserves_f_equivalences", r.t_preserves_f_equivalences},
              {"free_localization_exists", r.free_localization_exists},
              {"lfu_iso_ulff", r.lfu_iso_ulff},
              {"second_part_applies", r.second_part_applies},
              {"t_preserves_tf_equivalences", opt_bool(r.t_preserves_tf_equivalences)},
              {"lfu_iso_ltfu", opt_bool(r.lfu_iso_ltfu)},
              {"ltf_iso_lttf", opt_bool(r.ltf_iso_lttf)},
              {"tf_is_f_equivalence", opt_bool(r.tf_is_f_equivalence)},
              {"ff_is_ftf_equivalence", opt_bool(r.ff_is_ftf_equivalence)},
              {"same_local_classes", opt_bool(r.lff_same_as_lftf)}};
    if (!r.testable) o.status = Status::unsupported;
    return o;
  }

  Outcome idempotent(const Task& t) const {
    const Monad& m = env_.monad(name_arg(t, "monad"), t.position);
    const auto& cat = *m.category();
    Mor f = resolve_morphism(cat, arg(t, "f"), t.position);
    auto r = idempotent_case(m, f);
    json table = json::array();
    auto locals = r.t_local.members();
    for (std::size_t k = 0; k < r.table.size(); ++k) {
      table.push_back({{"object", cat.name_of(locals[k])},
                       {"lf", cat.name_of(r.table[k].first)},
                       {"ltf", cat.name_of(r.table[k].second)}});
    }
    Outcome o;
    o.body = {{"generator", cat.name_of(f)},
              {"t_local", object_list(cat, r.t_local)},
              {"lf_preserves_t_local", r.lf_preserves_s},
              {"lfi_iso_ilkf", opt_bool(r.lfi_iso_ilkf)},
              {"ltf_exists", r.ltf_exists},
              {"ltf_preserves_t_local", r.ltf_preserves_s},
              {"lfi_iso_ltfi", opt_bool(r.lfi_iso_ltfi)},
              {"table", table}};
    return o;
  }

  std::vector<Obj> modules(const Task& t, const EMCategory& em) const {
    const Term* module = t.arg("module");
    if (!module) return em.category->objects();
    Obj carrier = resolve_object(*em.monad.category(), module->text, t.position);
    for (Obj o : em.category->objects()) {
      if (em.algebra(o).carrier == carrier) return {o};
    }
    throw ResolveError(t.position, "no algebra with carrier '" + module->text + "'");
  }

  template <class Readings>
  Outcome readings_outcome(const EMCategory& em, const std::vector<Obj>& ms, Readings&& fn) const {
    const auto& cat = *em.monad.category();
    Outcome o;
    json rows = json::array();
    for (Obj mo : ms) {
      json row = {{"module", em.category->name_of(mo)}};
      try {
        auto r = fn(mo);
        row["base"] = cat.name_of(r.base);
        row["module_reading"] = cat.name_of(r.module_reading);
        row["underlying"] = cat.name_of(r.underlying);
        row["coincide"] = r.coincide;
        if (!r.coincide) o.status = worst(o.status, Status::theorem_violation);
      } catch (const Unsupported& e) {
        row["flag"] = e.what();
      }
      rows.push_back(row);
    }
    o.body["readings"] = rows;
    return o;
  }

  Outcome readings(const Task& t) const {
    auto [m, em, f] = monad_and_morphism(t);
    auto o = readings_outcome(em, modules(t, em), [&](Obj mo) { return tensor_readings(em, f, mo); });
    o.body["generator"] = m->category()->name_of(f);
    return o;
  }

  Outcome coinduced(const Task& t) const {
    const Monad& m = env_.monad(name_arg(t, "monad"), t.position);
    Obj a = resolve_object(*m.category(), name_arg(t, "object"), t.position);
    auto em = eilenberg_moore(m, options_.budget);
    auto col = build_cellularization(m.category(), a);
    Outcome o;
    o.body = {{"object", m.category()->name_of(a)}};
    if (!col) {
      o.status = Status::unsupported;
      o.body["flag"] = "no cellularization";
      return o;
    }
    auto r = coinduce_colocalization(em, *col, options_.budget);
    o.body["conditions"] = {{"a", r.cond_a}, {"b", r.cond_b}, {"c", r.cond_c}, {"d", r.cond_d}};
    o.body["agree"] = r.agree();
    o.body["induced"] = colocalization_json(r.induced);
    return o;
  }

  Outcome cellular(const Task& t) const {
    const Monad& m = env_.monad(name_arg(t, "monad"), t.position);
    Obj a = resolve_object(*m.category(), name_arg(t, "object"), t.position);
    auto em = eilenberg_moore(m, options_.budget);
    auto r = cellular_free_image_theorem(em, a);
    Outcome o;
    o.body = {{"object", m.category()->name_of(a)},
              {"testable", r.testable},
              {"untestable", r.untestable},
              {"t_preserves_cellular", r.t_preserves_cellular},
              {"cau_iso_ucfa", r.cau_iso_ucfa},
              {"second_part_applies", r.second_part_applies},
              {"t_preserves_ta_cellular", opt_bool(r.t_preserves_ta_cellular)},
              {"cau_iso_ctau", opt_bool(r.cau_iso_ctau)},
              {"cta_iso_ctta", opt_bool(r.cta_iso_ctta)}};
    if (!r.testable) o.status = Status::unsupported;
    return o;
  }

  Outcome cellular_readings_task(const Task& t) const {
    const Monad& m = env_.monad(name_arg(t, "monad"), t.position);
    Obj a = resolve_object(*m.category(), name_arg(t, "object"), t.position);
    auto em = eilenberg_moore(m, options_.budget);
    auto o = readings_outcome(em, modules(t, em), [&](Obj mo) { return cellular_readings(em, a, mo); });
    o.body["object"] = m.category()->name_of(a);
    return o;
  }

  Outcome mates(const Task& t) const {
    const Adjunction& adj = env_.adjunction(name_arg(t, "adjunction"), t.position);
    Mor a = resolve_morphism(*adj.left.source, arg(t, "source"), t.position);
    Mor b = resolve_morphism(*adj.left.target, arg(t, "target"), t.position);
    auto l1 = build_localization(adj.left.source, a);
    auto l2 = build_localization(adj.left.target, b);
    Outcome o;
    if (!l1 || !l2) {
      o.status = Status::unsupported;
      o.body["flag"] = "no localization";
      return o;
    }
    auto alpha = left_comparison(adj, *l1, *l2);
    auto beta = right_comparison(adj, *l1, *l2);
    o.body["alpha"] = nat_table(alpha);
    o.body["beta"] = nat_table(beta);
    bool consistent = alpha.has_value() == beta.has_value();
    if (alpha && beta) {
      auto mate = mate_of(*alpha, adj, *l1, *l2);
      bool forward = same_nat(mate, *beta);
      bool round_trip = same_nat(mate_inverse(mate, adj, *l1, *l2), *alpha) &&
                        same_nat(mate_of(mate_inverse(*beta, adj, *l1, *l2), adj, *l1, *l2), *beta);
      o.body["mate_matches"] = forward;
      o.body["round_trip"] = round_trip;
      consistent = consistent && forward && round_trip;
    }
    o.body["consistent"] = consistent;
    if (!consistent) o.status = Status::theorem_violation;
    return o;
  }

  Outcome dualize(const Task& t) const {
    CategoryPtr cat = env_.category(name_arg(t, "category"), t.position);
    Obj a = resolve_object(*cat, name_arg(t, "object"), t.position);
    auto direct = build_cellularization(cat, a);
    auto transported = transported_cellularization(cat, a);
    bool agree = direct.has_value() == transported.has_value() && (!direct || same_colocalization(*direct, *transported));
    Outcome o;
    o.body = {{"object", cat->name_of(a)},
              {"cellular_objects", object_list(*cat, cellular_objects(*cat, a))},
              {"direct", colocalization_json(direct)},
              {"transport_agrees", agree}};
    if (!agree) o.status = Status::theorem_violation;
    return o;
  }

  const Environment& env_;
  const RunOptions& options_;
};

Outcome guarded(const std::function<Outcome()>& fn) {
  Outcome o;
  try {
    return fn();
  } catch (const ResolveError& e) {
    o.status = Status::input_error;
    o.body = {{"error", e.what()}};
  } catch (const UnknownId& e) {
    o.status = Status::input_error;
    o.body = {{"error", e.what()}};
  } catch (const ShapeMismatch& e) {
    o.status = Status::input_error;
    o.body = {{"error", e.what()}};
  } catch (const TheoremViolation& e) {
    o.status = Status::theorem_violation;
    o.body = {{"error", e.what()}};
  } catch (const BudgetExceeded& e) {
    o.status = Status::budget_exceeded;
    o.body = {{"error", e.what()}};
  } catch (const Unsupported& e) {
    o.status = Status::unsupported;
    o.body = {{"flag", e.what()}};
  }
  return o;
}

const char* declaration_kind(const Declaration& d) {
  static const char* names[] = {"category", "functor", "nat", "monad", "adjunction", "fixture"};
  return names[d.index()];
}

json task_args(const Task& t) {
  json out = json::object();
  for (const auto& a : t.args) out[a.key] = print(a.value);
  return out;
}

Report finish(json doc, Status status) {
  Report r;
  r.status = status;
  r.document["schema_version"] = kSchemaVersion;
  r.document["status"] = to_string(status);
  r.document["exit_code"] = exit_code(status);
  for (auto& [k, v] : doc.items()) r.document[k] = v;
  return r;
}

Report input_error(const Error& e, std::optional<Position> pos) {
  json err = {{"message", e.what()}};
  if (pos) {
    err["line"] = pos->line;
    err["column"] = pos->column;
  }
  return finish({{"error", err}}, dynamic_cast<const BudgetExceeded*>(&e) ? Status::budget_exceeded : Status::input_error);
}

void render(std::ostringstream& out, const json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [](const json& x) {
    if (!x.is_object()) return !x.is_array();
    return std::all_of(x.begin(), x.end(), [](const json& y) { return !y.is_structured(); });
  };
  if (v.is_object()) {
    for (auto& [k, x] : v.items()) {
      if (!x.is_structured()) {
        out << pad << k << ": " << scalar(x) << '\n';
      } else if (x.empty()) {
        out << pad << k << ": " << (x.is_array() ? "[]" : "{}") << '\n';
      } else {
        out << pad << k << ":\n";
        render(out, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    bool all_scalar = std::all_of(v.begin(), v.end(), [](const json& y) { return !y.is_structured(); });
    if (all_scalar) {
      out << pad;
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar(v[k]);
      out << '\n';
      return;
    }
    for (const auto& x : v) {
      if (x.is_object() && flat(x)) {
        out << pad << "-";
        for (auto& [k, y] : x.items()) out << ' ' << k << '=' << scalar(y);
        out << '\n';
      } else {
        out << pad << "-\n";
        render(out, x, indent + 2);
      }
    }
  } else {
    out << pad << scalar(v) << '\n';
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::unsupported: return "unsupported";
    case Status::law_failure: return "law_failure";
    case Status::theorem_violation: return "theorem_violation";
    case Status::input_error: return "input_error";
    case Status::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok:
    case Status::unsupported: return 0;
    case Status::law_failure: return 1;
    case Status::theorem_violation: return 2;
    case Status::input_error: return 3;
    case Status::budget_exceeded: return 4;
  }
  return 3;
}

std::string Report::structured() const { return document.dump(2) + "\n"; }

std::string Report::text() const {
  std::ostringstream out;
  render(out, document, 0);
  return out.str();
}

Report run(const Document& doc, const RunOptions& options) {
  Environment env;
  try {
    env = resolve(doc, options.budget);
  } catch (const ResolveError& e) {
    return input_error(e, e.position);
  } catch (const Error& e) {
    return input_error(e, std::nullopt);
  }

  Status status = Status::ok;
  json decls = json::array();
  for (const auto& d : doc.declarations) {
    json entry = {{"name", declared_name(d)}, {"kind", declaration_kind(d)}};
    if (std::holds_alternative<FixtureDecl>(d)) {
      entry["checked"] = false;
    } else {
      TaskRunner runner(env, options);
      Outcome o = runner(Task{"check", {{"target", Term{Term::Kind::name, declared_name(d), {}, {}}}}, declared_at(d)});
      entry["checked"] = true;
      entry["ok"] = o.body["ok"];
      entry["violations"] = o.body["violations"];
      status = worst(status, o.status);
    }
    decls.push_back(entry);
  }

  std::vector<Outcome> outcomes(options.check_only ? 0 : doc.tasks.size());
  std::vector<double> elapsed(outcomes.size(), 0.0);
  std::vector<std::size_t> schedule(outcomes.size());
  for (std::size_t k = 0; k < schedule.size(); ++k) schedule[k] = k;
  if (options.seed != 0) std::shuffle(schedule.begin(), schedule.end(), std::mt19937_64(options.seed));

  TaskRunner runner(env, options);
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t s; (s = cursor.fetch_add(1)) < schedule.size();) {
      std::size_t k = schedule[s];
      auto start = std::chrono::steady_clock::now();
      outcomes[k] = guarded([&] { return runner(doc.tasks[k]); });
      elapsed[k] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(schedule.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  json tasks = json::array();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const Task& t = doc.tasks[k];
    json entry = {{"index", k}, {"task", t.name}, {"args", task_args(t)}, {"status", to_string(outcomes[k].status)}};
    if (options.timing) entry["elapsed_ms"] = elapsed[k];
    entry["result"] = outcomes[k].body;
    tasks.push_back(entry);
    status = worst(status, outcomes[k].status);
  }
  return finish({{"declarations", decls}, {"tasks", tasks}}, status);
}

Report run_text(const std::string& text, const RunOptions& options) {
  Document doc;
  try {
    doc = parse(text);
  } catch (const SyntaxError& e) {
    return input_error(e, e.position);
  }
  return run(doc, options);
}

}  // namespace catloc::dsl
