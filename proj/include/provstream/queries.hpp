#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "provstream/io.hpp"
#include "provstream/pipeline.hpp"

namespace provstream {

struct BuiltinQuery {
  std::string name;
  std::string description;
  LogFormat format;
  std::function<Pipeline()> build;
};

/// x -> Fork -> { Window(3, Cumulate(×)), TurnInto(0) } -> ≠.
/// True while the product of every three successive values is non-zero.
Pipeline make_window_product();

/// (id, action) -> Slice(id, .action -> lifecycle Moore machine, ∧).
Pipeline make_process_lifecycle();

/// (action, p) -> G(p < 0 -> X(action = a ∧ X(action = a))).
Pipeline make_ltl_property();

const std::vector<BuiltinQuery>& builtin_queries();

/// nullptr for unknown names.
const BuiltinQuery* find_query(std::string_view name);

}  // namespace provstream
