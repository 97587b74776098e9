#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "provstream/event.hpp"

namespace provstream {

/// Value of a function application together with the argument indices that
/// explain it. Indices are sorted, unique and never empty.
struct LineageResult {
  Event value;
  std::vector<std::size_t> contributors;
};

/// Pure n-ary function over events with value-dependent lineage. A function
/// without a fixed arity accepts any non-zero number of arguments.
class LineageFunction {
 public:
  using Evaluator = std::function<LineageResult(std::span<const Event>)>;

  LineageFunction(std::string name, std::optional<std::size_t> arity, EventType arg_type,
                  EventType result_type, Evaluator eval);

  const std::string& name() const { return name_; }
  std::optional<std::size_t> arity() const { return arity_; }
  bool variadic() const { return !arity_.has_value(); }
  EventType arg_type() const { return arg_type_; }
  EventType result_type() const { return result_type_; }

  LineageResult eval_with_lineage(std::span<const Event> args) const;

  Event operator()(std::span<const Event> args) const { return eval_with_lineage(args).value; }

 private:
  std::string name_;
  std::optional<std::size_t> arity_;
  EventType arg_type_;
  EventType result_type_;
  Evaluator eval_;
};

// Function palette. Short-circuit rules pick the lowest-index absorbing
// argument; every other function is explained by all of its arguments.
namespace fn {

LineageFunction identity();
LineageFunction addition(std::size_t arity = 2);
LineageFunction subtraction();
LineageFunction multiplication(std::size_t arity = 2);
// Variadic when arity is empty.
LineageFunction conjunction(std::optional<std::size_t> arity = 2);
LineageFunction disjunction(std::optional<std::size_t> arity = 2);
LineageFunction implication();
LineageFunction negation();
LineageFunction equals();
LineageFunction not_equals();
LineageFunction less_than();
LineageFunction equals_constant(Event literal);
LineageFunction less_than_constant(double literal);
LineageFunction fetch_field(std::string name);

}  // namespace fn

}  // namespace provstream
