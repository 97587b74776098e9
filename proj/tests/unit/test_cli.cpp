#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "provstream");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = provstream::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kNumbers = "3\n1\n4\n0\n5\n9\n2\n";
const std::string kLifecycle = "1,a\n2,a\n2,b\n1,b\n2,c\n2,d\n";
const std::string kLtl = "b,1\nc,-2\na,0\nd,0\n";

}  // namespace

TEST_CASE("run prints one line per output") {
  auto r = run({"run", "--query", "window-product", "--ascii"}, kNumbers);
  CHECK(r.code == 0);
  CHECK(r.out == "0 T\n1 F\n2 F\n3 F\n4 T\n");
  r = run({"run", "--query", "ltl-property", "--tracker", "on"}, kLtl);
  CHECK(r.code == 0);
  CHECK(r.out == "0 ⊥\n1 ⊥\n");
}

TEST_CASE("explain flattens to input events") {
  auto r = run({"explain", "--query", "process-lifecycle", "--position", "5", "--flatten"}, kLifecycle);
  CHECK(r.code == 0);
  CHECK(r.out == "1: (2,a)\n5: (2,d)\n");
  r = run({"explain", "--query", "ltl-property", "--position", "0", "--flatten"}, kLtl);
  CHECK(r.out == "1: (c,-2)\n3: (d,0)\n");
  r = run({"explain", "--query", "window-product", "--position", "1", "--flatten"}, kNumbers);
  CHECK(r.out == "3: 0\n");
}

TEST_CASE("explain graph formats") {
  for (const char* f : {"dot", "json", "text"}) {
    const auto r = run({"explain", "--query", "window-product", "--position", "0", "--format", f}, kNumbers);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"run", "--query", "window-product"}, "1\nx\n").code == 1);
  CHECK(run({"run", "--query", "nope"}, kNumbers).code == 2);
  auto r = run({"explain", "--query", "ltl-property", "--position", "2"}, kLtl);
  CHECK(r.code == 3);
  CHECK(r.err.find("no verdict yet") != std::string::npos);
  r = run({"run", "--query", "window-product"}, "");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(run({"run", "--query", "window-product", "--input", "/nonexistent/log"}).code == 1);
}

TEST_CASE("bench reports samples") {
  const auto r = run({"bench", "--query", "ltl-property", "--length", "500", "--samples", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"samples\"") != std::string::npos);
}
