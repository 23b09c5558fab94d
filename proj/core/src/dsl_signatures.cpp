#include "dsl_signatures.hpp"

#include <map>

namespace catloc::dsl {

namespace {

Param req(std::string key) { return {std::move(key), true, std::nullopt}; }
Param opt(std::string key) { return {std::move(key), false, std::nullopt}; }
Param def(std::string key, std::string value) { return {std::move(key), false, std::move(value)}; }

const Signature* find(const std::map<std::string, Signature>& table, const std::string& key) {
  auto it = table.find(key);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

const Signature* fixture_signature(const std::string& kind) {
  static const std::map<std::string, Signature> table = {
      {"abelian", {{def("max_order", "4")}}},
      {"groups", {{def("max_order", "8")}}},
      {"poset", {{def("shape", "chain"), def("size", "3")}}},
      {"tensor", {{req("category"), req("ring")}}},
      {"abelianization", {{req("category")}}},
      {"closure", {{req("category"), req("map")}}},
  };
  return find(table, kind);
}

const Signature* task_signature(const std::string& name) {
  static const std::map<std::string, Signature> table = {
      {"check", {{req("target")}}},
      {"localize", {{req("category"), req("f")}}},
      {"compare", {{req("functor"), req("source"), req("target")}}},
      {"induce", {{req("monad"), req("f")}}},
      {"dualize", {{req("category"), req("object")}}},
      {"verify", {{req("theorem")}}},
  };
  return find(table, name);
}

const Signature* verify_signature(const std::string& statement) {
  static const std::map<std::string, Signature> table = {
      {"induced", {{req("theorem"), req("monad"), req("f")}}},
      {"free_image", {{req("theorem"), req("monad"), req("f")}}},
      {"idempotent", {{req("theorem"), req("monad"), req("f")}}},
      {"readings", {{req("theorem"), req("monad"), req("f"), opt("module")}}},
      {"coinduced", {{req("theorem"), req("monad"), req("object")}}},
      {"cellular", {{req("theorem"), req("monad"), req("object")}}},
      {"cellular_readings", {{req("theorem"), req("monad"), req("object"), opt("module")}}},
      {"mates", {{req("theorem"), req("adjunction"), req("source"), req("target")}}},
  };
  return find(table, statement);
}

}  // namespace catloc::dsl
