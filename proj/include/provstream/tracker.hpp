#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "provstream/event.hpp"

namespace provstream {

using ProcessorId = std::uint32_t;
using Position = std::uint64_t;

enum class Side : std::uint8_t { kInput, kOutput };

/// Names one event occurrence in one stream of one processor.
struct StreamPointer {
  ProcessorId processor = 0;
  Side side = Side::kOutput;
  std::size_t pipe = 0;
  Position position = 0;

  auto operator<=>(const StreamPointer&) const = default;
};

std::string to_string(const StreamPointer& p);

struct Association {
  ProcessorId processor = 0;
  std::size_t out_pipe = 0;
  Position out_pos = 0;
  std::size_t in_pipe = 0;
  Position in_pos = 0;
};

struct PortRef {
  ProcessorId processor = 0;
  std::size_t pipe = 0;

  auto operator<=>(const PortRef&) const = default;
};

struct ConnectionRecord {
  PortRef upstream;    // output pipe
  PortRef downstream;  // input pipe

  auto operator<=>(const ConnectionRecord&) const = default;
};

struct ProvenanceNode {
  StreamPointer pointer;
  std::optional<Event> value;
  std::string role;     // processor name
  bool source = false;  // input occurrence at a pipeline source port
};

/// Explanation graph. Nodes are kept sorted by pointer; edges run from the
/// explained occurrence to the explaining one and are stored as node indices.
struct ProvenanceDag {
  StreamPointer root;
  std::vector<ProvenanceNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> find(const StreamPointer& p) const;
  std::vector<std::size_t> leaves() const;
};

/// Source-level leaves of the DAG, deduplicated and sorted by position.
std::vector<ProvenanceNode> flatten(const ProvenanceDag& dag);

/// Records input/output associations and inter-processor connections, and
/// answers explanation queries. One tracker serves one pipeline.
class EventTracker {
 public:
  struct Stats {
    std::size_t processors = 0;
    std::size_t associations = 0;
    std::size_t connections = 0;
    std::size_t sources = 0;
    std::size_t values = 0;
    std::size_t value_payload_bytes = 0;
  };

  void register_processor(ProcessorId id, std::string name, std::size_t in_arity,
                          std::size_t out_arity);
  void register_connection(const ConnectionRecord& c);
  void register_source(PortRef input);

  /// Stores one association; repeated calls with the same record are no-ops.
  void associate(const Association& a);

  void record_output(ProcessorId id, std::size_t pipe, Position pos, const Event& value);
  void record_input(ProcessorId id, std::size_t pipe, Position pos, const Event& value);

  /// Builds the explanation of the occurrence named by `query`. Throws
  /// Error(kUnknownProcessor) or Error(kPositionNotYetProduced).
  ProvenanceDag get_provenance_tree(const StreamPointer& query) const;

  /// Input pipe/position pairs associated with one output occurrence.
  std::vector<std::pair<std::size_t, Position>> associations_of(ProcessorId id, std::size_t out_pipe,
                                                                Position out_pos) const;
  std::vector<ConnectionRecord> connections_from(ProcessorId upstream) const;
  std::optional<PortRef> upstream_of(PortRef input) const;
  bool is_source(PortRef input) const;
  std::size_t produced(ProcessorId id, std::size_t out_pipe) const;

  const Stats& stats() const { return stats_; }

 private:
  struct ProcessorInfo {
    std::string name;
    std::size_t in_arity = 0;
    std::size_t out_arity = 0;
    std::vector<std::vector<Event>> outputs;  // per out pipe, by position
    std::vector<std::vector<Event>> inputs;   // recorded only at source ports
  };

  struct OutKey {
    ProcessorId processor;
    std::size_t pipe;
    Position position;
    bool operator==(const OutKey&) const = default;
  };

  struct OutKeyHash {
    std::size_t operator()(const OutKey& k) const;
  };

  const ProcessorInfo& info(ProcessorId id) const;
  std::optional<Event> value_at(const StreamPointer& p) const;
  void check_produced(const StreamPointer& p) const;

  std::map<ProcessorId, ProcessorInfo> processors_;
  std::unordered_map<OutKey, std::vector<std::pair<std::size_t, Position>>, OutKeyHash>
      associations_;
  std::map<PortRef, PortRef> upstream_;  // downstream input -> upstream output
  std::vector<ConnectionRecord> connections_;
  std::vector<PortRef> sources_;
  Stats stats_;
};

}  // namespace provstream
