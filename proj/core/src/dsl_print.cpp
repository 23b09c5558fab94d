#include <sstream>

#include "catloc/dsl.hpp"

namespace catloc::dsl {

namespace {

template <class T, class Fn>
void section(std::ostream& out, const char* name, const std::vector<T>& items, Fn&& item) {
  if (items.empty()) return;
  out << "  " << name << ": ";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out << ", ";
    item(items[k]);
  }
  out << ";\n";
}

void args(std::ostream& out, const std::vector<Arg>& list) {
  out << '(';
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) out << ", ";
    out << list[k].key << '=' << print(list[k].value);
  }
  out << ')';
}

struct DeclPrinter {
  std::ostream& out;

  void operator()(const CategoryDecl& d) const {
    out << "category " << d.name << " {\n";
    section(out, "objects", d.objects, [&](const std::string& o) { out << o; });
    section(out, "morphisms", d.morphisms,
            [&](const MorphismDecl& m) { out << m.name << ": " << m.source << " -> " << m.target; });
    section(out, "compose", d.composites, [&](const CompositeDecl& c) { out << c.g << '.' << c.f << " = " << c.h; });
    out << "}\n";
  }
  void operator()(const FunctorDecl& d) const {
    out << "functor " << d.name << ": " << d.source << " -> " << d.target << " {\n";
    section(out, "objects", d.objects, [&](const MapEntry& e) { out << e.from << " -> " << e.to; });
    section(out, "morphisms", d.morphisms, [&](const MapEntry& e) { out << e.from << " -> " << e.to; });
    out << "}\n";
  }
  void operator()(const NatDecl& d) const {
    out << "nat " << d.name << ": " << d.source << " => " << d.target << " {\n";
    section(out, "components", d.components, [&](const MapEntry& e) { out << e.from << ": " << e.to; });
    out << "}\n";
  }
  void operator()(const MonadDecl& d) const {
    out << "monad " << d.name << " = (" << d.functor << ", " << d.unit << ", " << d.mult << ");\n";
  }
  void operator()(const AdjunctionDecl& d) const {
    out << "adjunction " << d.name << " = (" << d.left << ", " << d.right << ", " << d.unit << ", " << d.counit
        << ");\n";
  }
  void operator()(const FixtureDecl& d) const {
    out << "fixture " << d.kind;
    args(out, d.params);
    out << " as " << d.name << ";\n";
  }
};

}  // namespace

std::string print(const Term& term) {
  switch (term.kind) {
    case Term::Kind::name: return term.text;
    case Term::Kind::arrow: return term.text + "->" + term.target;
    case Term::Kind::list: {
      std::string s = "[";
      for (std::size_t k = 0; k < term.items.size(); ++k) s += (k ? ", " : "") + term.items[k];
      return s + "]";
    }
  }
  return {};
}

std::string print(const Document& doc) {
  std::ostringstream out;
  for (std::size_t k = 0; k < doc.declarations.size(); ++k) {
    if (k) out << '\n';
    std::visit(DeclPrinter{out}, doc.declarations[k]);
  }
  if (!doc.declarations.empty() && !doc.tasks.empty()) out << '\n';
  for (const auto& t : doc.tasks) {
    out << "task " << t.name;
    args(out, t.args);
    out << ";\n";
  }
  return out.str();
}

}  // namespace catloc::dsl
