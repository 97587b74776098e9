#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "provstream/bench.hpp"
#include "provstream/error.hpp"
#include "provstream/io.hpp"
#include "provstream/queries.hpp"

namespace provstream::cli {

namespace {

struct Options {
  std::string query;
  std::string input = "-";
  std::uint64_t position = 0;
  bool flatten = false;
  std::string format;
  std::string tracker = "off";
  std::size_t length = 10000;
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  bool header = false;
  bool ascii = false;
};

std::vector<Event> load(const BuiltinQuery& query, const Options& opts, std::istream& in) {
  if (opts.input == "-") return read_log(in, query.format, opts.header);
  std::ifstream file(opts.input);
  if (!file) throw ParseError(0, "cannot open " + opts.input);
  return read_log(file, query.format, opts.header);
}

int cmd_run(const BuiltinQuery& query, const Options& opts, std::istream& in, std::ostream& out) {
  const auto events = load(query, opts, in);
  Pipeline p = query.build();
  if (opts.tracker == "on") p.set_tracker(std::make_shared<EventTracker>());
  for (const auto& e : events) {
    p.push(0, e, [&](std::size_t, Position pos, const Event& v) {
      out << pos << ' ' << to_string(v, {.ascii = opts.ascii}) << '\n';
    });
  }
  return kExitOk;
}

int cmd_explain(const BuiltinQuery& query, const Options& opts, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const auto events = load(query, opts, in);
  Pipeline p = query.build();
  p.set_tracker(std::make_shared<EventTracker>());
  for (const auto& e : events) p.push(0, e, nullptr);

  const auto sink = p.sinks().front();
  const auto produced = p.processor(sink.processor).produced(sink.pipe);
  if (opts.position >= produced) {
    err << "no verdict yet for position " << opts.position << ": the query has produced " << produced
        << " output event" << (produced == 1 ? "" : "s") << " after " << events.size()
        << " input events\n";
    return kExitPositionUnavailable;
  }
  const auto dag = p.tracker()->get_provenance_tree({sink.processor, Side::kOutput, sink.pipe, opts.position});
  if (opts.flatten) {
    for (const auto& n : flatten(dag)) {
      out << n.pointer.position << ": " << (n.value ? to_string(*n.value, {.ascii = opts.ascii}) : "?")
          << '\n';
    }
    return kExitOk;
  }
  const RenderOptions render{.ascii = opts.ascii};
  if (opts.format == "dot") {
    out << export_dot(dag, render);
  } else if (opts.format == "json") {
    out << export_json(dag) << '\n';
  } else {
    out << render_text(dag, render);
  }
  return kExitOk;
}

int cmd_bench(const Options& opts, std::ostream& out) {
  BenchOptions bench;
  bench.query = opts.query;
  bench.length = opts.length;
  bench.tracker = opts.tracker == "on";
  bench.samples = opts.samples;
  bench.seed = opts.seed;
  const auto report = run_bench(bench);
  out << (opts.format == "json" ? report_json(report) + "\n" : report_table(report));
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--query", opts.query, "window-product | process-lifecycle | ltl-property")->required();
  cmd->add_option("--tracker", opts.tracker, "enable lineage tracking")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_flag("--ascii", opts.ascii, "print booleans as T/F");
}

void add_input(CLI::App* cmd, Options& opts) {
  cmd->add_option("--input", opts.input, "log file, or - for stdin");
  cmd->add_flag("--header", opts.header, "first CSV line names the columns");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explainable event-stream queries"};
  app.require_subcommand(1);
  Options opts;

  auto* run_cmd = app.add_subcommand("run", "evaluate a built-in query on a log");
  add_common(run_cmd, opts);
  add_input(run_cmd, opts);

  auto* explain_cmd = app.add_subcommand("explain", "explain one output event of a built-in query");
  add_common(explain_cmd, opts);
  add_input(explain_cmd, opts);
  explain_cmd->add_option("--position", opts.position, "0-based sink output position")->required();
  explain_cmd->add_flag("--flatten", opts.flatten, "print only the explaining input events");
  explain_cmd->add_option("--format", opts.format, "graph rendering")
      ->check(CLI::IsMember({"dot", "json", "text"}));

  auto* bench_cmd = app.add_subcommand("bench", "measure tracker overhead on a synthetic log");
  add_common(bench_cmd, opts);
  bench_cmd->add_option("--length", opts.length, "number of synthetic events")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", opts.seed, "generator seed");
  bench_cmd->add_option("--samples", opts.samples, "memory samples")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  // Accepted for a uniform grammar; benchmarks generate their own input.
  add_input(bench_cmd, opts);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto* query = find_query(opts.query);
  if (query == nullptr) {
    err << "unknown query '" << opts.query << "'; known queries:";
    for (const auto& q : builtin_queries()) err << ' ' << q.name;
    err << '\n';
    return kExitUnknownQuery;
  }

  try {
    if (*run_cmd) return cmd_run(*query, opts, in, out);
    if (*explain_cmd) return cmd_explain(*query, opts, in, out, err);
    return cmd_bench(opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::kPositionNotYetProduced ? kExitPositionUnavailable : kExitParse;
  }
}

}  // namespace provstream::cli
