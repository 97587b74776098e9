#include "provstream/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "provstream/error.hpp"

namespace provstream {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view text, std::size_t line_no) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError(line_no, "cannot parse number '" + std::string(trim(text)) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    parts.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Event parse_line(const LogFormat& format, std::string_view line, std::size_t line_no) {
  switch (format.kind) {
    case LogFormat::Kind::kNumbers:
      return parse_number(line, line_no);
    case LogFormat::Kind::kSymbols:
      return std::string(trim(line));
    case LogFormat::Kind::kCsvTuples:
      break;
  }
  const auto parts = split_commas(line);
  if (parts.size() != format.fields.size()) {
    throw ParseError(line_no, "expected " + std::to_string(format.fields.size()) + " fields, got " +
                                  std::to_string(parts.size()));
  }
  Event::Tuple fields;
  fields.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& spec = format.fields[i];
    Event value = spec.type == FieldType::kNumber ? Event(parse_number(parts[i], line_no))
                                                  : Event(std::string(parts[i]));
    fields.push_back({spec.name, std::move(value)});
  }
  return Event::tuple(std::move(fields));
}

std::vector<Event> read_log(std::istream& in, LogFormat format, bool header) {
  std::vector<Event> events;
  std::string line;
  std::size_t line_no = 0;
  bool need_header = header && format.kind == LogFormat::Kind::kCsvTuples;
  const auto declared = format.fields;
  bool permuted = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (need_header) {
      need_header = false;
      std::vector<FieldSpec> ordered;
      for (auto name : split_commas(line)) {
        auto it = std::find_if(format.fields.begin(), format.fields.end(),
                               [&](const FieldSpec& f) { return f.name == name; });
        if (it == format.fields.end()) {
          throw ParseError(line_no, "unknown column '" + std::string(name) + "'");
        }
        ordered.push_back(*it);
      }
      std::set<std::string> names;
      for (const auto& f : ordered) names.insert(f.name);
      if (names.size() != format.fields.size() || ordered.size() != format.fields.size()) {
        throw ParseError(line_no, "header must name each of the " +
                                      std::to_string(format.fields.size()) + " fields once");
      }
      format.fields = std::move(ordered);
      for (std::size_t i = 0; i < declared.size(); ++i) {
        permuted = permuted || declared[i].name != format.fields[i].name;
      }
      continue;
    }
    Event e = parse_line(format, line, line_no);
    if (permuted) {
      // Events keep the declared field order whatever the column order.
      Event::Tuple fields;
      for (const auto& spec : declared) fields.push_back({spec.name, e.field(spec.name)});
      e = Event::tuple(std::move(fields));
    }
    events.push_back(std::move(e));
  }
  return events;
}

namespace {

std::string node_id(const StreamPointer& p) {
  return "p" + std::to_string(p.processor) + (p.side == Side::kInput ? "_in" : "_out") +
         std::to_string(p.pipe) + "_" + std::to_string(p.position);
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string value_text(const ProvenanceNode& n, RenderOptions opts) {
  return n.value ? to_string(*n.value, {.ascii = opts.ascii}) : "?";
}

ordered_json event_to_json(const Event& e) {
  switch (e.type()) {
    case EventType::kBoolean: return e.as_bool();
    case EventType::kNumber: return e.as_number();
    case EventType::kText: return e.as_text();
    default: {
      ordered_json obj = ordered_json::object();
      for (const auto& f : e.as_tuple()) obj[f.name] = event_to_json(f.value);
      return obj;
    }
  }
}

Event event_from_json(const ordered_json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    Event::Tuple fields;
    for (const auto& [k, v] : j.items()) fields.push_back({k, event_from_json(v)});
    return Event::tuple(std::move(fields));
  }
  throw Error(Errc::kParse, "unsupported JSON event value: " + j.dump());
}

ordered_json pointer_to_json(const StreamPointer& p) {
  ordered_json j;
  j["processor"] = p.processor;
  j["side"] = p.side == Side::kInput ? "input" : "output";
  j["pipe"] = p.pipe;
  j["position"] = p.position;
  return j;
}

StreamPointer pointer_from_json(const ordered_json& j) {
  StreamPointer p;
  p.processor = j.at("processor").get<ProcessorId>();
  p.side = j.at("side").get<std::string>() == "input" ? Side::kInput : Side::kOutput;
  p.pipe = j.at("pipe").get<std::size_t>();
  p.position = j.at("position").get<Position>();
  return p;
}

}  // namespace

std::string export_dot(const ProvenanceDag& dag, RenderOptions opts) {
  std::ostringstream out;
  out << "digraph provenance {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : dag.nodes) {
    out << "  " << node_id(n.pointer) << " [label=\"" << dot_escape(n.role) << "\\n"
        << dot_escape(to_string(n.pointer)) << "\\n" << dot_escape(value_text(n, opts)) << "\"";
    if (n.pointer == dag.root) out << ", style=bold";
    if (n.source) out << ", shape=ellipse";
    out << "];\n";
  }
  for (const auto& [from, to] : dag.edges) {
    out << "  " << node_id(dag.nodes[from].pointer) << " -> " << node_id(dag.nodes[to].pointer)
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const ProvenanceDag& dag) {
  ordered_json j;
  j["root"] = pointer_to_json(dag.root);
  ordered_json nodes = ordered_json::array();
  for (const auto& n : dag.nodes) {
    ordered_json node = pointer_to_json(n.pointer);
    node["role"] = n.role;
    node["value"] = n.value ? event_to_json(*n.value) : ordered_json(nullptr);
    node["source"] = n.source;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : dag.edges) edges.push_back({from, to});
  j["edges"] = std::move(edges);
  ordered_json sources = ordered_json::array();
  for (const auto& n : flatten(dag)) sources.push_back(n.pointer.position);
  j["sources"] = std::move(sources);
  return j.dump();
}

ProvenanceDag parse_dag_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("invalid provenance JSON: ") + e.what());
  }
  try {
    ProvenanceDag dag;
    dag.root = pointer_from_json(j.at("root"));
    for (const auto& node : j.at("nodes")) {
      ProvenanceNode n;
      n.pointer = pointer_from_json(node);
      n.role = node.at("role").get<std::string>();
      if (!node.at("value").is_null()) n.value = event_from_json(node.at("value"));
      n.source = node.at("source").get<bool>();
      dag.nodes.push_back(std::move(n));
    }
    for (const auto& e : j.at("edges")) {
      const auto from = e.at(0).get<std::size_t>();
      const auto to = e.at(1).get<std::size_t>();
      if (from >= dag.nodes.size() || to >= dag.nodes.size()) {
        throw Error(Errc::kParse, "edge refers to a missing node");
      }
      dag.edges.emplace_back(from, to);
    }
    return dag;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("malformed provenance JSON: ") + e.what());
  }
}

std::string render_text(const ProvenanceDag& dag, RenderOptions opts) {
  std::vector<std::vector<std::size_t>> children(dag.nodes.size());
  for (const auto& [from, to] : dag.edges) children[from].push_back(to);
  for (auto& c : children) std::sort(c.begin(), c.end());

  std::ostringstream out;
  std::vector<bool> printed(dag.nodes.size(), false);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t depth) {
    const auto& n = dag.nodes[i];
    out << std::string(depth * 2, ' ') << '#' << i << ' ' << to_string(n.pointer) << ' ' << n.role
        << " = " << value_text(n, opts);
    if (printed[i]) {
      out << " (see #" << i << ")\n";
      return;
    }
    printed[i] = true;
    if (n.source) out << " [source]";
    out << '\n';
    for (auto c : children[i]) walk(c, depth + 1);
  };
  if (auto root = dag.find(dag.root)) walk(*root, 0);
  return out.str();
}

}  // namespace provstream
