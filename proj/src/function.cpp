#include "provstream/function.hpp"

#include <numeric>
#include <utility>

#include "provstream/error.hpp"

namespace provstream {

LineageFunction::LineageFunction(std::string name, std::optional<std::size_t> arity,
                                 EventType arg_type, EventType result_type, Evaluator eval)
    : name_(std::move(name)),
      arity_(arity),
      arg_type_(arg_type),
      result_type_(result_type),
      eval_(std::move(eval)) {}

LineageResult LineageFunction::eval_with_lineage(std::span<const Event> args) const {
  if (arity_ ? args.size() != *arity_ : args.empty()) {
    throw Error(Errc::kContractViolation, name_ + ": expected " +
                                              (arity_ ? std::to_string(*arity_) : "at least 1") +
                                              " arguments, got " + std::to_string(args.size()));
  }
  return eval_(args);
}

namespace fn {

namespace {

std::vector<std::size_t> all_of(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Shared shape of ×, ∧ and ∨: the first argument equal to the absorbing
// element explains the result alone.
template <typename Fold, typename IsAbsorbing>
LineageResult short_circuit(std::span<const Event> args, Fold fold, IsAbsorbing absorbing) {
  std::optional<std::size_t> first;
  Event acc = args[0];
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) acc = fold(acc, args[i]);
    if (!first && absorbing(args[i])) first = i;
  }
  if (first) return {acc, {*first}};
  return {acc, all_of(args.size())};
}

}  // namespace

LineageFunction identity() {
  return {"identity", 1, EventType::kAny, EventType::kAny,
          [](std::span<const Event> a) { return LineageResult{a[0], {0}}; }};
}

LineageFunction addition(std::size_t arity) {
  return {"+", arity, EventType::kNumber, EventType::kNumber, [](std::span<const Event> a) {
            double sum = 0;
            for (const auto& e : a) sum += e.as_number();
            return LineageResult{sum, all_of(a.size())};
          }};
}

LineageFunction subtraction() {
  return {"-", 2, EventType::kNumber, EventType::kNumber, [](std::span<const Event> a) {
            return LineageResult{a[0].as_number() - a[1].as_number(), {0, 1}};
          }};
}

LineageFunction multiplication(std::size_t arity) {
  return {"×", arity, EventType::kNumber, EventType::kNumber, [](std::span<const Event> a) {
            for (const auto& e : a) e.as_number();
            return short_circuit(
                a, [](const Event& x, const Event& y) { return Event(x.as_number() * y.as_number()); },
                [](const Event& e) { return e.as_number() == 0; });
          }};
}

LineageFunction conjunction(std::optional<std::size_t> arity) {
  return {"∧", arity, EventType::kBoolean, EventType::kBoolean, [](std::span<const Event> a) {
            for (const auto& e : a) e.as_bool();
            return short_circuit(
                a, [](const Event& x, const Event& y) { return Event(x.as_bool() && y.as_bool()); },
                [](const Event& e) { return !e.as_bool(); });
          }};
}

LineageFunction disjunction(std::optional<std::size_t> arity) {
  return {"∨", arity, EventType::kBoolean, EventType::kBoolean, [](std::span<const Event> a) {
            for (const auto& e : a) e.as_bool();
            return short_circuit(
                a, [](const Event& x, const Event& y) { return Event(x.as_bool() || y.as_bool()); },
                [](const Event& e) { return e.as_bool(); });
          }};
}

LineageFunction implication() {
  return {"→", 2, EventType::kBoolean, EventType::kBoolean, [](std::span<const Event> a) {
            const bool antecedent = a[0].as_bool();
            const bool consequent = a[1].as_bool();
            if (!antecedent) return LineageResult{true, {0}};
            if (consequent) return LineageResult{true, {1}};
            return LineageResult{false, {0, 1}};
          }};
}

LineageFunction negation() {
  return {"¬", 1, EventType::kBoolean, EventType::kBoolean,
          [](std::span<const Event> a) { return LineageResult{!a[0].as_bool(), {0}}; }};
}

LineageFunction equals() {
  return {"=", 2, EventType::kAny, EventType::kBoolean,
          [](std::span<const Event> a) { return LineageResult{a[0] == a[1], {0, 1}}; }};
}

LineageFunction not_equals() {
  return {"≠", 2, EventType::kAny, EventType::kBoolean,
          [](std::span<const Event> a) { return LineageResult{a[0] != a[1], {0, 1}}; }};
}

LineageFunction less_than() {
  return {"<", 2, EventType::kNumber, EventType::kBoolean, [](std::span<const Event> a) {
            return LineageResult{a[0].as_number() < a[1].as_number(), {0, 1}};
          }};
}

LineageFunction equals_constant(Event literal) {
  auto name = "=" + to_string(literal, {.ascii = true});
  return {std::move(name), 1, EventType::kAny, EventType::kBoolean,
          [literal = std::move(literal)](std::span<const Event> a) {
            return LineageResult{a[0] == literal, {0}};
          }};
}

LineageFunction less_than_constant(double literal) {
  return {"<" + format_number(literal), 1, EventType::kNumber, EventType::kBoolean,
          [literal](std::span<const Event> a) {
            return LineageResult{a[0].as_number() < literal, {0}};
          }};
}

LineageFunction fetch_field(std::string name) {
  auto label = "." + name;
  return {std::move(label), 1, EventType::kTuple, EventType::kAny,
          [name = std::move(name)](std::span<const Event> a) {
            return LineageResult{a[0].field(name), {0}};
          }};
}

}  // namespace fn

}  // namespace provstream
