#include "provstream/event.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "provstream/error.hpp"

namespace provstream {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateInputConnection: return "duplicate-input-connection";
    case Errc::kCycleDetected: return "cycle-detected";
    case Errc::kTypeMismatch: return "type-mismatch";
    case Errc::kUnknownProcessor: return "unknown-processor";
    case Errc::kInvalidPipe: return "invalid-pipe";
    case Errc::kPositionNotYetProduced: return "position-not-yet-produced";
    case Errc::kFieldAccess: return "field-access";
    case Errc::kDomain: return "domain-error";
    case Errc::kNoFireableTransition: return "no-fireable-transition";
    case Errc::kContractViolation: return "contract-violation";
    case Errc::kParse: return "parse-error";
  }
  return "unknown";
}

const char* event_type_name(EventType type) {
  switch (type) {
    case EventType::kBoolean: return "boolean";
    case EventType::kNumber: return "number";
    case EventType::kText: return "text";
    case EventType::kTuple: return "tuple";
    case EventType::kAny: return "any";
  }
  return "?";
}

Event Event::tuple(Tuple fields) {
  std::unordered_set<std::string_view> seen;
  for (const auto& f : fields) {
    if (!seen.insert(f.name).second) {
      throw Error(Errc::kFieldAccess, "duplicate tuple field '" + f.name + "'");
    }
  }
  Event e;
  e.value_ = std::make_shared<const Tuple>(std::move(fields));
  return e;
}

EventType Event::type() const {
  switch (value_.index()) {
    case 0: return EventType::kBoolean;
    case 1: return EventType::kNumber;
    case 2: return EventType::kText;
    default: return EventType::kTuple;
  }
}

namespace {

[[noreturn]] void wrong_type(EventType want, EventType got) {
  throw Error(Errc::kTypeMismatch, std::string("expected ") + event_type_name(want) +
                                       " event, got " + event_type_name(got));
}

}  // namespace

bool Event::as_bool() const {
  if (const auto* b = std::get_if<bool>(&value_)) return *b;
  wrong_type(EventType::kBoolean, type());
}

double Event::as_number() const {
  if (const auto* x = std::get_if<double>(&value_)) return *x;
  wrong_type(EventType::kNumber, type());
}

const std::string& Event::as_text() const {
  if (const auto* s = std::get_if<std::string>(&value_)) return *s;
  wrong_type(EventType::kText, type());
}

const Event::Tuple& Event::as_tuple() const {
  if (const auto* t = std::get_if<TuplePtr>(&value_)) return **t;
  wrong_type(EventType::kTuple, type());
}

const Event& Event::field(std::string_view name) const {
  for (const auto& f : as_tuple()) {
    if (f.name == name) return f.value;
  }
  throw Error(Errc::kFieldAccess, "tuple has no field '" + std::string(name) + "'");
}

bool operator==(const Event& a, const Event& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_tuple()) {
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
      if (ta[i].name != tb[i].name || ta[i].value != tb[i].value) return false;
    }
    return true;
  }
  return a.value_ == b.value_;
}

std::size_t Event::hash() const {
  std::size_t h = std::hash<std::size_t>{}(value_.index());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (value_.index()) {
    case 0: mix(std::hash<bool>{}(std::get<bool>(value_))); break;
    case 1: mix(std::hash<double>{}(std::get<double>(value_))); break;
    case 2: mix(std::hash<std::string>{}(std::get<std::string>(value_))); break;
    default:
      for (const auto& f : as_tuple()) {
        mix(std::hash<std::string>{}(f.name));
        mix(f.value.hash());
      }
  }
  return h;
}

std::string format_number(double x) {
  if (std::isfinite(x) && x == std::trunc(x) && std::fabs(x) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(x));
  }
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string to_string(const Event& e, FormatOptions opts) {
  switch (e.type()) {
    case EventType::kBoolean:
      if (opts.ascii) return e.as_bool() ? "T" : "F";
      return e.as_bool() ? "⊤" : "⊥";
    case EventType::kNumber:
      return format_number(e.as_number());
    case EventType::kText:
      return e.as_text();
    default: {
      std::string out = "(";
      bool first = true;
      for (const auto& f : e.as_tuple()) {
        if (!first) out += ',';
        first = false;
        out += to_string(f.value, opts);
      }
      return out + ")";
    }
  }
}

}  // namespace provstream
