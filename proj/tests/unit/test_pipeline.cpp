#include "doctest.h"
#include "helpers.hpp"
#include "provstream/bench.hpp"
#include "provstream/error.hpp"
#include "provstream/function.hpp"
#include "provstream/processors.hpp"
#include "provstream/queries.hpp"

using namespace testing_support;

namespace {

Errc connect_error(Pipeline& p, ProcessorId up, std::size_t op, ProcessorId down, std::size_t ip) {
  try {
    p.connect(up, op, down, ip);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kParse;
}

}  // namespace

TEST_CASE("fresh ids are sequential and never reused") {
  Pipeline p;
  CHECK(p.fresh_id() == 0);
  CHECK(p.fresh_id() == 1);
  CHECK(p.fresh_id() == 2);
  CHECK(p.fresh_id() == 3);
  CHECK(p.emplace<Fork>(2) == 4);
}

TEST_CASE("connect rejects malformed wiring") {
  Pipeline p;
  const auto fork = p.emplace<Fork>(2);
  const auto add = p.emplace<ApplyFunction>(fn::addition());
  const auto neg = p.emplace<ApplyFunction>(fn::negation());
  const auto id = p.emplace<ApplyFunction>(fn::identity());
  CHECK(connect_error(p, fork, 0, 42, 0) == Errc::kUnknownProcessor);
  CHECK(connect_error(p, fork, 2, add, 0) == Errc::kInvalidPipe);
  CHECK(connect_error(p, fork, 0, add, 2) == Errc::kInvalidPipe);
  p.connect(fork, 0, add, 0);
  CHECK(connect_error(p, fork, 1, add, 0) == Errc::kDuplicateInputConnection);
  CHECK(connect_error(p, add, 0, add, 1) == Errc::kCycleDetected);
  CHECK(connect_error(p, add, 0, neg, 0) == Errc::kTypeMismatch);
  p.connect(add, 0, id, 0);
  CHECK(connect_error(p, id, 0, fork, 0) == Errc::kCycleDetected);
  p.add_source(add, 1);
  CHECK_THROWS_AS(p.add_source(add, 1), Error);
}

TEST_CASE("empty input yields no output and no tracker entries") {
  for (const auto& q : builtin_queries()) {
    auto p = q.build();
    const auto out = run_tracked(p, {});
    CHECK(out.empty());
    CHECK(p.tracker()->stats().associations == 0);
  }
}

TEST_CASE("evaluation is deterministic and unaffected by tracking") {
  for (const auto& q : builtin_queries()) {
    const auto log = generate_log(q.name, 300, 7);
    auto a = q.build();
    auto b = q.build();
    auto c = q.build();
    const auto on = run_tracked(a, log);
    const auto on_again = run_tracked(b, log);
    const auto off = run_untracked(c, log);
    CHECK(on == on_again);
    CHECK(on == off);
  }
}

TEST_CASE("fresh copy restarts state") {
  auto p = make_window_product();
  const auto first = run_untracked(p, numbers({3, 1, 4, 0, 5}));
  auto q = p.fresh_copy();
  CHECK(run_untracked(q, numbers({3, 1, 4, 0, 5})) == first);
  CHECK(q.tracker() == nullptr);
}

TEST_CASE("sink callback reports sink index and position") {
  auto p = Pipeline::of(std::make_unique<ApplyFunction>(fn::negation()));
  std::vector<Position> seen;
  p.push(0, true, [&](std::size_t sink, Position pos, const Event& e) {
    CHECK(sink == 0);
    CHECK(e == Event(false));
    seen.push_back(pos);
  });
  p.push(0, true, [&](std::size_t, Position pos, const Event&) { seen.push_back(pos); });
  CHECK(seen == std::vector<Position>{0, 1});
  CHECK(p.consumed(0) == 2);
}
