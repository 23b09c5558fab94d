#pragma once

#include <optional>
#include <string>
#include <vector>

namespace catloc::dsl {

struct Param {
  std::string key;
  bool required = true;
  std::optional<std::string> fallback;  // filled in when omitted
};

struct Signature {
  std::vector<Param> params;
};

const Signature* fixture_signature(const std::string& kind);
const Signature* task_signature(const std::string& name);
/// Parameters of `verify`, starting with `theorem`.
const Signature* verify_signature(const std::string& statement);

}  // namespace catloc::dsl
