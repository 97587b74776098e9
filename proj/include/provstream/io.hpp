#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "provstream/event.hpp"
#include "provstream/tracker.hpp"

namespace provstream {

enum class FieldType { kNumber, kText };

struct FieldSpec {
  std::string name;
  FieldType type;
};

/// Shape of one log line: a number, a bare symbol, or a comma-separated tuple
/// with declared fields. No quoting; surrounding whitespace is trimmed.
struct LogFormat {
  enum class Kind { kNumbers, kSymbols, kCsvTuples };

  Kind kind = Kind::kNumbers;
  std::vector<FieldSpec> fields;

  static LogFormat numbers() { return {Kind::kNumbers, {}}; }
  static LogFormat symbols() { return {Kind::kSymbols, {}}; }
  static LogFormat csv(std::vector<FieldSpec> fields) { return {Kind::kCsvTuples, std::move(fields)}; }
};

/// Throws ParseError carrying `line_no` on a wrong field count or a bad number.
Event parse_line(const LogFormat& format, std::string_view line, std::size_t line_no);

/// Parses a whole log, skipping blank lines. With `header`, the first
/// non-blank line names the CSV columns; it must be a permutation of the
/// declared field names and sets their order.
std::vector<Event> read_log(std::istream& in, LogFormat format, bool header = false);

struct RenderOptions {
  bool ascii = false;
};

/// Graphviz digraph; node ids are "p<proc>_<in|out><pipe>_<pos>".
std::string export_dot(const ProvenanceDag& dag, RenderOptions opts = {});

/// {"root":..., "nodes":[...], "edges":[[from,to],...], "sources":[positions]}.
std::string export_json(const ProvenanceDag& dag);
ProvenanceDag parse_dag_json(std::string_view text);

/// Indented expansion from the root; repeated nodes print as back-references.
std::string render_text(const ProvenanceDag& dag, RenderOptions opts = {});

}  // namespace provstream
