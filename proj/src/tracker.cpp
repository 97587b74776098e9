#include "provstream/tracker.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

std::string to_string(const StreamPointer& p) {
  return "p" + std::to_string(p.processor) + (p.side == Side::kInput ? ".in" : ".out") +
         std::to_string(p.pipe) + "[" + std::to_string(p.position) + "]";
}

std::optional<std::size_t> ProvenanceDag::find(const StreamPointer& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p,
                             [](const ProvenanceNode& n, const StreamPointer& q) { return n.pointer < q; });
  if (it == nodes.end() || it->pointer != p) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::size_t> ProvenanceDag::leaves() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const auto& [from, to] : edges) has_out[from] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!has_out[i]) out.push_back(i);
  }
  return out;
}

std::vector<ProvenanceNode> flatten(const ProvenanceDag& dag) {
  std::vector<ProvenanceNode> out;
  for (auto i : dag.leaves()) {
    if (dag.nodes[i].source) out.push_back(dag.nodes[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const ProvenanceNode& a, const ProvenanceNode& b) {
    return std::tie(a.pointer.position, a.pointer.processor, a.pointer.pipe) <
           std::tie(b.pointer.position, b.pointer.processor, b.pointer.pipe);
  });
  return out;
}

std::size_t EventTracker::OutKeyHash::operator()(const OutKey& k) const {
  std::size_t h = std::hash<std::uint64_t>{}(k.position);
  h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(k.processor) << 16) ^ k.pipe) +
       0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void EventTracker::register_processor(ProcessorId id, std::string name, std::size_t in_arity,
                                      std::size_t out_arity) {
  auto [it, inserted] = processors_.try_emplace(id);
  if (!inserted) return;
  it->second.name = std::move(name);
  it->second.in_arity = in_arity;
  it->second.out_arity = out_arity;
  it->second.outputs.resize(out_arity);
  it->second.inputs.resize(in_arity);
  ++stats_.processors;
}

void EventTracker::register_connection(const ConnectionRecord& c) {
  auto [it, inserted] = upstream_.emplace(c.downstream, c.upstream);
  if (!inserted) return;
  connections_.push_back(c);
  ++stats_.connections;
}

void EventTracker::register_source(PortRef input) {
  if (is_source(input)) return;
  sources_.push_back(input);
  ++stats_.sources;
}

void EventTracker::associate(const Association& a) {
  auto& inputs = associations_[OutKey{a.processor, a.out_pipe, a.out_pos}];
  std::pair<std::size_t, Position> entry{a.in_pipe, a.in_pos};
  if (std::find(inputs.begin(), inputs.end(), entry) != inputs.end()) return;
  inputs.push_back(entry);
  ++stats_.associations;
}

namespace {

void store_at(std::vector<Event>& stream, Position pos, const Event& value) {
  if (pos < stream.size()) {
    stream[pos] = value;
    return;
  }
  stream.resize(pos);
  stream.push_back(value);
}

}  // namespace

void EventTracker::record_output(ProcessorId id, std::size_t pipe, Position pos, const Event& value) {
  auto it = processors_.find(id);
  if (it == processors_.end() || pipe >= it->second.outputs.size()) return;
  store_at(it->second.outputs[pipe], pos, value);
  ++stats_.values;
  stats_.value_payload_bytes += size_model::event_bytes(value);
}

void EventTracker::record_input(ProcessorId id, std::size_t pipe, Position pos, const Event& value) {
  auto it = processors_.find(id);
  if (it == processors_.end() || pipe >= it->second.inputs.size()) return;
  store_at(it->second.inputs[pipe], pos, value);
  ++stats_.values;
  stats_.value_payload_bytes += size_model::event_bytes(value);
}

std::vector<std::pair<std::size_t, Position>> EventTracker::associations_of(ProcessorId id,
                                                                            std::size_t out_pipe,
                                                                            Position out_pos) const {
  auto it = associations_.find(OutKey{id, out_pipe, out_pos});
  if (it == associations_.end()) return {};
  auto out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConnectionRecord> EventTracker::connections_from(ProcessorId upstream) const {
  std::vector<ConnectionRecord> out;
  for (const auto& c : connections_) {
    if (c.upstream.processor == upstream) out.push_back(c);
  }
  return out;
}

std::optional<PortRef> EventTracker::upstream_of(PortRef input) const {
  auto it = upstream_.find(input);
  if (it == upstream_.end()) return std::nullopt;
  return it->second;
}

bool EventTracker::is_source(PortRef input) const {
  return std::find(sources_.begin(), sources_.end(), input) != sources_.end();
}

std::size_t EventTracker::produced(ProcessorId id, std::size_t out_pipe) const {
  const auto& pi = info(id);
  return out_pipe < pi.outputs.size() ? pi.outputs[out_pipe].size() : 0;
}

const EventTracker::ProcessorInfo& EventTracker::info(ProcessorId id) const {
  auto it = processors_.find(id);
  if (it == processors_.end()) {
    throw Error(Errc::kUnknownProcessor, "no processor with id " + std::to_string(id));
  }
  return it->second;
}

std::optional<Event> EventTracker::value_at(const StreamPointer& p) const {
  const auto& pi = info(p.processor);
  if (p.side == Side::kOutput) {
    if (p.pipe < pi.outputs.size() && p.position < pi.outputs[p.pipe].size()) {
      return pi.outputs[p.pipe][p.position];
    }
    return std::nullopt;
  }
  if (auto up = upstream_of({p.processor, p.pipe})) {
    return value_at({up->processor, Side::kOutput, up->pipe, p.position});
  }
  if (p.pipe < pi.inputs.size() && p.position < pi.inputs[p.pipe].size()) {
    return pi.inputs[p.pipe][p.position];
  }
  return std::nullopt;
}

void EventTracker::check_produced(const StreamPointer& p) const {
  const auto& pi = info(p.processor);
  const bool output = p.side == Side::kOutput;
  const std::size_t arity = output ? pi.out_arity : pi.in_arity;
  if (p.pipe >= arity) {
    throw Error(Errc::kInvalidPipe, to_string(p) + ": processor has " + std::to_string(arity) +
                                        (output ? " output" : " input") + " pipes");
  }
  std::size_t available = 0;
  if (output) {
    available = pi.outputs[p.pipe].size();
  } else if (auto up = upstream_of({p.processor, p.pipe})) {
    available = produced(up->processor, up->pipe);
  } else {
    available = pi.inputs[p.pipe].size();
  }
  if (p.position >= available) {
    throw Error(Errc::kPositionNotYetProduced,
                to_string(p) + " not yet produced (" + std::to_string(available) + " available)");
  }
}

ProvenanceDag EventTracker::get_provenance_tree(const StreamPointer& query) const {
  check_produced(query);

  std::set<StreamPointer> seen;
  std::set<std::pair<StreamPointer, StreamPointer>> edges;
  std::vector<StreamPointer> stack{query};
  seen.insert(query);

  auto visit = [&](const StreamPointer& from, const StreamPointer& to) {
    edges.emplace(from, to);
    if (seen.insert(to).second) stack.push_back(to);
  };

  while (!stack.empty()) {
    const StreamPointer cur = stack.back();
    stack.pop_back();
    if (cur.side == Side::kOutput) {
      auto it = associations_.find(OutKey{cur.processor, cur.pipe, cur.position});
      if (it == associations_.end()) continue;
      for (const auto& [in_pipe, in_pos] : it->second) {
        visit(cur, {cur.processor, Side::kInput, in_pipe, in_pos});
      }
    } else if (auto up = upstream_of({cur.processor, cur.pipe})) {
      visit(cur, {up->processor, Side::kOutput, up->pipe, cur.position});
    }
  }

  ProvenanceDag dag;
  dag.root = query;
  dag.nodes.reserve(seen.size());
  for (const auto& p : seen) {  // std::set iterates in pointer order
    ProvenanceNode node;
    node.pointer = p;
    node.value = value_at(p);
    node.role = info(p.processor).name;
    node.source = p.side == Side::kInput && is_source({p.processor, p.pipe});
    dag.nodes.push_back(std::move(node));
  }
  for (const auto& [from, to] : edges) {
    dag.edges.emplace_back(*dag.find(from), *dag.find(to));
  }
  return dag;
}

namespace size_model {

std::size_t event_bytes(const Event& e) {
  switch (e.type()) {
    case EventType::kText:
      return kEventBytes + e.as_text().size();
    case EventType::kTuple: {
      std::size_t total = kEventBytes;
      for (const auto& f : e.as_tuple()) total += kFieldBytes + f.name.size() + event_bytes(f.value);
      return total;
    }
    default:
      return kEventBytes;
  }
}

std::size_t tracker_bytes(const EventTracker& tracker) {
  const auto& s = tracker.stats();
  return kTrackerBaseBytes + s.processors * kProcessorInfoBytes +
         s.associations * kAssociationBytes + s.connections * kConnectionBytes +
         s.sources * kSourceBytes + s.values * kValueRecordBytes + s.value_payload_bytes;
}

}  // namespace size_model

}  // namespace provstream
