#include "doctest.h"
#include "helpers.hpp"
#include "provstream/bench.hpp"
#include "provstream/size_model.hpp"

using namespace testing_support;

TEST_CASE("tracker size model counts records exactly") {
  EventTracker t;
  CHECK(estimate_retained_bytes(t) == size_model::kTrackerBaseBytes);
  t.register_processor(0, "f", 1, 1);
  const auto base = estimate_retained_bytes(t);
  for (Position i = 0; i < 100; ++i) t.associate({0, 0, i, 0, i});
  CHECK(estimate_retained_bytes(t) == base + 100 * size_model::kAssociationBytes);
}

TEST_CASE("generated logs are seeded") {
  for (const char* q : {"window-product", "process-lifecycle", "ltl-property"}) {
    CHECK(generate_log(q, 200, 5) == generate_log(q, 200, 5));
    CHECK(generate_log(q, 200, 5) != generate_log(q, 200, 6));
    CHECK(generate_log(q, 200, 5).size() == 200);
  }
}

TEST_CASE("memory shapes") {
  for (const char* q : {"window-product", "ltl-property"}) {
    const auto off = run_bench({.query = q, .length = 2000, .tracker = false, .samples = 5});
    REQUIRE(off.samples.size() == 5);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& s : off.samples) {
      CHECK(s.tracker_bytes == 0);
      lo = std::min(lo, s.total());
      hi = std::max(hi, s.total());
    }
    CHECK(hi - lo <= 40);
  }
  for (const char* q : {"window-product", "process-lifecycle", "ltl-property"}) {
    const auto on = run_bench({.query = q, .length = 2000, .tracker = true, .samples = 5});
    std::vector<double> xs, ys;
    for (const auto& s : on.samples) {
      xs.push_back(static_cast<double>(s.events));
      ys.push_back(static_cast<double>(s.total()));
    }
    const auto fit = fit_line(xs, ys);
    CHECK(fit.slope > 0);
    CHECK(fit.r2 >= 0.99);
  }
}

TEST_CASE("line fit") {
  const std::vector<double> xs{1, 2, 3, 4};
  const std::vector<double> line{3, 5, 7, 9};
  const auto f = fit_line(xs, line);
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(1));
  CHECK(f.r2 == doctest::Approx(1));
  const std::vector<double> flat{4, 4, 4, 4};
  CHECK(fit_line(xs, flat).r2 == 1);
}

TEST_CASE("bench rejects unknown queries") {
  CHECK_THROWS_AS(run_bench({.query = "nope"}), std::invalid_argument);
}
