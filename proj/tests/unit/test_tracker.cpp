#include "doctest.h"
#include "helpers.hpp"
#include "provstream/error.hpp"
#include "provstream/function.hpp"
#include "provstream/processors.hpp"

using namespace testing_support;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kParse;
}

}  // namespace

TEST_CASE("associate is idempotent") {
  EventTracker t;
  t.register_processor(0, "f", 1, 1);
  t.associate({0, 0, 0, 0, 3});
  t.associate({0, 0, 0, 0, 3});
  t.associate({0, 0, 0, 0, 1});
  CHECK(t.stats().associations == 2);
  CHECK(associated_inputs(t, 0, 0) == std::vector<Position>{1, 3});
}

TEST_CASE("registration calls are idempotent") {
  EventTracker t;
  t.register_processor(0, "a", 1, 1);
  t.register_processor(0, "a", 1, 1);
  t.register_processor(1, "b", 1, 1);
  t.register_connection({{0, 0}, {1, 0}});
  t.register_connection({{0, 0}, {1, 0}});
  t.register_source({0, 0});
  t.register_source({0, 0});
  CHECK(t.stats().processors == 2);
  CHECK(t.stats().connections == 1);
  CHECK(t.stats().sources == 1);
  CHECK(t.upstream_of({1, 0}) == PortRef{0, 0});
  CHECK(!t.upstream_of({0, 0}));
  CHECK(t.is_source({0, 0}));
  CHECK(t.connections_from(0).size() == 1);
}

TEST_CASE("DAG of a two-stage chain alternates association and connection hops") {
  Pipeline p;
  const auto add = p.emplace<ApplyFunction>(fn::addition(), 2);
  const auto neg = p.emplace<ApplyFunction>(fn::subtraction());
  p.connect(add, 0, neg, 0);
  p.add_source(add, 0);
  p.add_source(add, 1);
  p.add_source(neg, 1);
  p.add_sink(neg);
  p.set_tracker(std::make_shared<EventTracker>());
  const auto out = p.feed({numbers({1, 2}), numbers({10, 20}), numbers({5, 5})});
  CHECK(out[0] == numbers({6, 17}));

  const auto dag = p.tracker()->get_provenance_tree({neg, Side::kOutput, 0, 1});
  CHECK(dag.root == StreamPointer{neg, Side::kOutput, 0, 1});
  // root, two inputs of neg, add's output, two inputs of add
  CHECK(dag.nodes.size() == 6);
  CHECK(dag.edges.size() == 5);
  CHECK(std::is_sorted(dag.nodes.begin(), dag.nodes.end(),
                       [](const auto& a, const auto& b) { return a.pointer < b.pointer; }));
  const auto flat = flatten(dag);
  REQUIRE(flat.size() == 3);
  for (const auto& n : flat) {
    CHECK(n.source);
    CHECK(n.pointer.position == 1);
    REQUIRE(n.value);
  }
  CHECK(*flat[0].value == Event(2));
  CHECK(*flat[1].value == Event(20));
  CHECK(*flat[2].value == Event(5));
  const auto root = dag.find(dag.root);
  REQUIRE(root);
  CHECK(*dag.nodes[*root].value == Event(17));
}

TEST_CASE("query errors") {
  auto p = Pipeline::of(std::make_unique<ApplyFunction>(fn::identity()));
  run_tracked(p, numbers({1, 2}));
  const auto& t = *p.tracker();
  CHECK(code_of([&] { t.get_provenance_tree({9, Side::kOutput, 0, 0}); }) == Errc::kUnknownProcessor);
  CHECK(code_of([&] { t.get_provenance_tree({0, Side::kOutput, 3, 0}); }) == Errc::kInvalidPipe);
  CHECK(code_of([&] { t.get_provenance_tree({0, Side::kOutput, 0, 2}); }) ==
        Errc::kPositionNotYetProduced);
  CHECK(t.produced(0, 0) == 2);
  CHECK(explain_positions(p, 1) == std::vector<Position>{1});
}

TEST_CASE("querying an input occurrence walks to its producer") {
  Pipeline p;
  const auto a = p.emplace<ApplyFunction>(fn::negation());
  const auto b = p.emplace<ApplyFunction>(fn::negation());
  p.connect(a, 0, b, 0);
  p.add_source(a);
  p.add_sink(b);
  run_tracked(p, bools({true, false}));
  const auto dag = p.tracker()->get_provenance_tree({b, Side::kInput, 0, 1});
  const auto flat = flatten(dag);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].pointer == StreamPointer{a, Side::kInput, 0, 1});
}
