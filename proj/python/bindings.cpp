#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "provstream/bench.hpp"
#include "provstream/error.hpp"
#include "provstream/io.hpp"
#include "provstream/queries.hpp"

namespace py = pybind11;

namespace provstream {

namespace {

Event from_py(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Event::Tuple fields;
    for (const auto& [k, v] : obj.cast<py::dict>()) {
      fields.push_back({k.cast<std::string>(), from_py(v)});
    }
    return Event::tuple(std::move(fields));
  }
  throw py::type_error("events must be bool, int, float, str or dict");
}

py::object to_py(const Event& e) {
  switch (e.type()) {
    case EventType::kBoolean: return py::bool_(e.as_bool());
    case EventType::kNumber: return py::float_(e.as_number());
    case EventType::kText: return py::str(e.as_text());
    default: {
      py::dict d;
      for (const auto& f : e.as_tuple()) d[py::str(f.name)] = to_py(f.value);
      return std::move(d);
    }
  }
}

const BuiltinQuery& query_named(const std::string& name) {
  const auto* q = find_query(name);
  if (q == nullptr) throw py::value_error("unknown query '" + name + "'");
  return *q;
}

std::vector<Event> events_from(const py::iterable& items) {
  std::vector<Event> out;
  for (const auto& item : items) out.push_back(from_py(item));
  return out;
}

Pipeline fed(const BuiltinQuery& q, const std::vector<Event>& events, bool tracker) {
  Pipeline p = q.build();
  if (tracker) p.set_tracker(std::make_shared<EventTracker>());
  for (const auto& e : events) p.push(0, e, nullptr);
  return p;
}

ProvenanceDag explanation(const std::string& query, const py::iterable& events, Position position) {
  const auto p = fed(query_named(query), events_from(events), true);
  const auto sink = p.sinks().front();
  return p.tracker()->get_provenance_tree({sink.processor, Side::kOutput, sink.pipe, position});
}

}  // namespace

}  // namespace provstream

PYBIND11_MODULE(_core, m) {
  using namespace provstream;
  m.doc() = "Explainable event-stream queries with input/output lineage.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("queries", [] {
    std::vector<std::string> names;
    for (const auto& q : builtin_queries()) names.push_back(q.name);
    return names;
  }, "Names of the built-in queries.");

  m.def("parse_log", [](const std::string& query, const std::string& text, bool header) {
    std::istringstream in(text);
    py::list out;
    for (const auto& e : read_log(in, query_named(query).format, header)) out.append(to_py(e));
    return out;
  }, py::arg("query"), py::arg("text"), py::arg("header") = false,
     "Parse log text in the input format of a built-in query.");

  m.def("run", [](const std::string& query, const py::iterable& events, bool tracker) {
    const auto& q = query_named(query);
    Pipeline p = q.build();
    if (tracker) p.set_tracker(std::make_shared<EventTracker>());
    py::list out;
    for (const auto& e : events_from(events)) {
      p.push(0, e, [&out](std::size_t, Position, const Event& v) { out.append(to_py(v)); });
    }
    return out;
  }, py::arg("query"), py::arg("events"), py::arg("tracker") = false,
     "Evaluate a built-in query and return its output events.");

  m.def("explain", [](const std::string& query, const py::iterable& events, Position position) {
    py::list out;
    for (const auto& n : flatten(explanation(query, events, position))) {
      out.append(py::make_tuple(n.pointer.position, n.value ? to_py(*n.value) : py::none()));
    }
    return out;
  }, py::arg("query"), py::arg("events"), py::arg("position"),
     "Input events (position, value) explaining one output event.");

  m.def("explain_graph", [](const std::string& query, const py::iterable& events, Position position,
                            const std::string& format, bool ascii) {
    const auto dag = explanation(query, events, position);
    if (format == "dot") return export_dot(dag, {.ascii = ascii});
    if (format == "json") return export_json(dag);
    if (format == "text") return render_text(dag, {.ascii = ascii});
    throw py::value_error("format must be dot, json or text");
  }, py::arg("query"), py::arg("events"), py::arg("position"), py::arg("format") = "json",
     py::arg("ascii") = false, "Full explanation graph rendered as DOT, JSON or text.");

  m.def("generate_log", [](const std::string& query, std::size_t length, std::uint64_t seed) {
    py::list out;
    for (const auto& e : generate_log(query, length, seed)) out.append(to_py(e));
    return out;
  }, py::arg("query"), py::arg("length"), py::arg("seed") = 1);

  m.def("bench", [](const std::string& query, std::size_t length, bool tracker, std::size_t samples,
                    std::uint64_t seed) {
    BenchOptions opts;
    opts.query = query;
    opts.length = length;
    opts.tracker = tracker;
    opts.samples = samples;
    opts.seed = seed;
    BenchReport r;
    {
      py::gil_scoped_release release;
      r = run_bench(opts);
    }
    py::dict d;
    d["query"] = r.query;
    d["tracker"] = r.tracker;
    d["events"] = r.events;
    d["outputs"] = r.outputs;
    d["seconds"] = r.seconds;
    d["throughput"] = r.throughput;
    py::list samples_out;
    for (const auto& s : r.samples) {
      samples_out.append(py::make_tuple(s.events, s.tracker_bytes, s.processor_bytes));
    }
    d["samples"] = samples_out;
    return d;
  }, py::arg("query"), py::arg("length") = 10000, py::arg("tracker") = false,
     py::arg("samples") = 10, py::arg("seed") = 1,
     "Run the tracker-overhead benchmark; samples are (events, tracker_bytes, processor_bytes).");
}
