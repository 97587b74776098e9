#include "doctest.h"
#include "provstream/error.hpp"
#include "provstream/event.hpp"

using namespace provstream;

TEST_CASE("tuple field names must be unique") {
  CHECK_THROWS_AS(Event::tuple({{"id", 1}, {"id", 2}}), Error);
  const auto t = Event::tuple({{"id", 2}, {"action", "a"}});
  CHECK(t.field("id") == Event(2));
  CHECK(t.field("action") == Event("a"));
}

TEST_CASE("missing field and wrong alternative raise typed errors") {
  const auto t = Event::tuple({{"id", 2}});
  try {
    t.field("action");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kFieldAccess);
  }
  try {
    Event(1).as_bool();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kTypeMismatch);
  }
}

TEST_CASE("equality is exact and structural") {
  CHECK(Event(0) == Event(0.0));
  CHECK(Event(0) != Event(false));
  CHECK(Event("0") != Event(0));
  CHECK(Event::tuple({{"a", 1}}) == Event::tuple({{"a", 1}}));
  CHECK(Event::tuple({{"a", 1}}) != Event::tuple({{"b", 1}}));
  CHECK(Event(0.0).hash() == Event(-0.0).hash());
}

TEST_CASE("display form") {
  CHECK(to_string(Event(true)) == "⊤");
  CHECK(to_string(Event(false)) == "⊥");
  CHECK(to_string(Event(false), {.ascii = true}) == "F");
  CHECK(to_string(Event(12)) == "12");
  CHECK(to_string(Event(-2)) == "-2");
  CHECK(to_string(Event(0.5)) == "0.5");
  CHECK(to_string(Event::tuple({{"id", 2}, {"action", "a"}})) == "(2,a)");
  CHECK(format_number(90.0) == "90");
}
