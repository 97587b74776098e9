#include "provstream/queries.hpp"

#include "provstream/fsm.hpp"
#include "provstream/ltl.hpp"
#include "provstream/processors.hpp"

namespace provstream {

Pipeline make_window_product() {
  Pipeline p;
  const auto fork = p.emplace<Fork>(2);
  const auto window = p.emplace<Window>(std::make_unique<Cumulate>(fn::multiplication()), 3);
  const auto zero = p.emplace<TurnInto>(Event(0));
  const auto differs = p.emplace<ApplyFunction>(fn::not_equals());
  p.connect(fork, 0, window, 0);
  p.connect(fork, 1, zero, 0);
  p.connect(window, 0, differs, 0);
  p.connect(zero, 0, differs, 1);
  p.add_source(fork);
  p.add_sink(differs);
  return p;
}

Pipeline make_process_lifecycle() {
  Pipeline per_instance;
  const auto action = per_instance.emplace<ApplyFunction>(fn::fetch_field("action"));
  const auto machine = per_instance.add(make_lifecycle_machine());
  per_instance.connect(action, 0, machine, 0);
  per_instance.add_source(action);
  per_instance.add_sink(machine);

  Pipeline p;
  const auto slice =
      p.emplace<Slice>(fn::fetch_field("id"), std::move(per_instance), fn::conjunction(std::nullopt));
  p.add_source(slice);
  p.add_sink(slice);
  return p;
}

Pipeline make_ltl_property() {
  Pipeline p;
  const auto fork = p.emplace<Fork>(2);
  const auto get_p = p.emplace<ApplyFunction>(fn::fetch_field("p"));
  const auto negative = p.emplace<ApplyFunction>(fn::less_than_constant(0));
  const auto get_action = p.emplace<ApplyFunction>(fn::fetch_field("action"));
  const auto is_a = p.emplace<ApplyFunction>(fn::equals_constant(Event("a")));
  const auto fork_a = p.emplace<Fork>(2);
  const auto next_a = p.emplace<Next>();
  const auto both = p.emplace<ApplyFunction>(fn::conjunction());
  const auto next_both = p.emplace<Next>();
  const auto implies = p.emplace<ApplyFunction>(fn::implication());
  const auto globally = p.emplace<Globally>();

  p.connect(fork, 0, get_p, 0);
  p.connect(get_p, 0, negative, 0);
  p.connect(fork, 1, get_action, 0);
  p.connect(get_action, 0, is_a, 0);
  p.connect(is_a, 0, fork_a, 0);
  p.connect(fork_a, 0, both, 0);
  p.connect(fork_a, 1, next_a, 0);
  p.connect(next_a, 0, both, 1);
  p.connect(both, 0, next_both, 0);
  p.connect(negative, 0, implies, 0);
  p.connect(next_both, 0, implies, 1);
  p.connect(implies, 0, globally, 0);
  p.add_source(fork);
  p.add_sink(globally);
  return p;
}

const std::vector<BuiltinQuery>& builtin_queries() {
  static const std::vector<BuiltinQuery> queries = {
      {"window-product", "product of every 3 successive numbers is non-zero", LogFormat::numbers(),
       make_window_product},
      {"process-lifecycle", "every interleaved (id,action) instance follows its lifecycle",
       LogFormat::csv({{"id", FieldType::kNumber}, {"action", FieldType::kText}}),
       make_process_lifecycle},
      {"ltl-property", "G(p < 0 -> X(action = a and X(action = a))) over (action,p)",
       LogFormat::csv({{"action", FieldType::kText}, {"p", FieldType::kNumber}}), make_ltl_property},
  };
  return queries;
}

const BuiltinQuery* find_query(std::string_view name) {
  for (const auto& q : builtin_queries()) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

}  // namespace provstream
