#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "provstream/error.hpp"
#include "provstream/fsm.hpp"

using namespace testing_support;

namespace {

std::vector<Event> symbols(const std::string& s) {
  std::vector<Event> out;
  for (char c : s) out.emplace_back(std::string(1, c));
  return out;
}

struct Run {
  Pipeline pipeline;
  std::vector<Event> outputs;
};

Run run_lifecycle(const std::vector<Event>& in) {
  auto p = Pipeline::of(make_lifecycle_machine());
  auto out = run_tracked(p, in);
  return {std::move(p), std::move(out)};
}

}  // namespace

TEST_CASE("lifecycle association sets") {
  auto r = run_lifecycle(symbols("abcb"));
  CHECK(r.outputs == bools({true, true, true, true}));
  const auto& t = *r.pipeline.tracker();
  CHECK(associated_inputs(t, 0, 0) == std::vector<Position>{0});
  CHECK(associated_inputs(t, 0, 1) == std::vector<Position>{0, 1});
  CHECK(associated_inputs(t, 0, 2) == std::vector<Position>{0, 1, 2});
  CHECK(associated_inputs(t, 0, 3) == std::vector<Position>{0, 3});

  auto s = run_lifecycle(symbols("abcbcba"));
  CHECK(s.outputs.back() == Event(false));
  CHECK(associated_inputs(*s.pipeline.tracker(), 0, 6) == std::vector<Position>{0, 5, 6});
}

TEST_CASE("lifecycle language") {
  CHECK(run_lifecycle(symbols("abd")).outputs.back() == Event(true));
  CHECK(run_lifecycle(symbols("abcbd")).outputs.back() == Event(true));
  CHECK(run_lifecycle(symbols("ad")).outputs.back() == Event(false));
  CHECK(run_lifecycle(symbols("b")).outputs.back() == Event(false));
  CHECK(run_lifecycle(symbols("abda")).outputs.back() == Event(false));
}

TEST_CASE("machine errors") {
  auto m = std::make_unique<MooreMachine>(0);
  m->add_transition(0, fn::equals_constant(Event("a")), 1);
  m->set_output(1, true);
  auto p = Pipeline::of(std::move(m));
  run_untracked(p, symbols("a"));
  try {
    run_untracked(p, symbols("a"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNoFireableTransition);
  }

  auto n = std::make_unique<MooreMachine>(0);
  n->add_transition(0, fn::equals_constant(Event("a")), 1);
  auto q = Pipeline::of(std::move(n));
  try {
    run_untracked(q, symbols("a"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kContractViolation);
  }
}

TEST_CASE("history stays a loop-free path and explanations replay") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> act(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::string trace;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) trace.push_back("abcd"[act(rng)]);
    const auto in = symbols(trace);

    auto machine = make_lifecycle_machine();
    auto* raw = machine.get();
    auto p = Pipeline::of(std::move(machine));
    const auto out = run_tracked(p, in);
    REQUIRE(out.size() == in.size());

    std::set<StateId> states;
    for (const auto& t : raw->history()) states.insert(t.state);
    CHECK(states.size() == raw->history().size());
    CHECK(raw->history().size() <= 5);

    for (Position k = 0; k < out.size(); ++k) {
      std::vector<Event> kept;
      for (auto pos : associated_inputs(*p.tracker(), 0, k)) kept.push_back(in[pos]);
      auto replay = Pipeline::of(make_lifecycle_machine());
      const auto again = run_untracked(replay, kept);
      CHECK(again.back() == out[k]);
    }
  }
}

TEST_CASE("returning to the initial state empties the path") {
  auto m = std::make_unique<MooreMachine>(0);
  m->add_transition(0, fn::equals_constant(Event("a")), 1);
  m->add_transition(1, fn::equals_constant(Event("b")), 0);
  m->set_output(0, false).set_output(1, true);
  auto* raw = m.get();
  auto p = Pipeline::of(std::move(m));
  CHECK(run_tracked(p, symbols("abab")) == bools({true, false, true, false}));
  CHECK(raw->history().empty());
  CHECK(associated_inputs(*p.tracker(), 0, 1) == std::vector<Position>{0, 1});
  CHECK(associated_inputs(*p.tracker(), 0, 2) == std::vector<Position>{2});
}
