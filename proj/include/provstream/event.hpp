#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace provstream {

enum class EventType { kBoolean, kNumber, kText, kTuple, kAny };

const char* event_type_name(EventType type);

// Two pipe types can be joined when they are equal or either side accepts anything.
inline bool compatible(EventType upstream, EventType downstream) {
  return upstream == EventType::kAny || downstream == EventType::kAny || upstream == downstream;
}

class Event;

struct Field;

/// Immutable tagged value flowing through pipes. Tuples share their field
/// storage, so copying an event is cheap regardless of its shape.
class Event {
 public:
  using Tuple = std::vector<Field>;

  Event() : value_(false) {}
  Event(bool b) : value_(b) {}  // NOLINT(google-explicit-constructor)
  Event(double x) : value_(x) {}  // NOLINT(google-explicit-constructor)
  Event(int x) : value_(static_cast<double>(x)) {}  // NOLINT(google-explicit-constructor)
  Event(std::string s) : value_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Event(const char* s) : value_(std::string(s)) {}  // NOLINT(google-explicit-constructor)

  /// Builds a tuple; throws if two fields share a name.
  static Event tuple(Tuple fields);

  EventType type() const;

  bool is_bool() const { return std::holds_alternative<bool>(value_); }
  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_text() const { return std::holds_alternative<std::string>(value_); }
  bool is_tuple() const { return std::holds_alternative<TuplePtr>(value_); }

  // Typed accessors throw Error(kTypeMismatch) on the wrong alternative.
  bool as_bool() const;
  double as_number() const;
  const std::string& as_text() const;
  const Tuple& as_tuple() const;

  /// Field lookup on a tuple event; throws Error(kFieldAccess) when absent.
  const Event& field(std::string_view name) const;

  friend bool operator==(const Event& a, const Event& b);
  friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  using TuplePtr = std::shared_ptr<const Tuple>;
  std::variant<bool, double, std::string, TuplePtr> value_;
};

struct Field {
  std::string name;
  Event value;
};

struct EventHash {
  std::size_t operator()(const Event& e) const { return e.hash(); }
};

struct FormatOptions {
  bool ascii = false;  // T/F instead of the UTF-8 verum/falsum glyphs
};

/// Shortest round-trip rendering; integral values print without a fraction.
std::string format_number(double x);

/// Display form: booleans as ⊤/⊥, tuples as "(v1,v2,...)".
std::string to_string(const Event& e, FormatOptions opts = {});

}  // namespace provstream
