#pragma once

#include <memory>
#include <string>
#include <vector>

#include "provstream/pipeline.hpp"
#include "provstream/tracker.hpp"

namespace testing_support {

using namespace provstream;

inline Event lifecycle(double id, const std::string& action) {
  return Event::tuple({{"id", id}, {"action", action}});
}

inline Event ltl(const std::string& action, double p) {
  return Event::tuple({{"action", action}, {"p", p}});
}

inline std::vector<Event> numbers(std::initializer_list<double> xs) {
  return std::vector<Event>(xs.begin(), xs.end());
}

inline std::vector<Event> bools(std::initializer_list<bool> xs) {
  return std::vector<Event>(xs.begin(), xs.end());
}

inline std::vector<Event> sample_lifecycle_log() {
  return {lifecycle(1, "a"), lifecycle(2, "a"), lifecycle(2, "b"),
          lifecycle(1, "b"), lifecycle(2, "c"), lifecycle(2, "d")};
}

inline std::vector<Event> sample_ltl_log() {
  return {ltl("b", 1), ltl("c", -2), ltl("a", 0), ltl("d", 0)};
}

/// Single-source, single-sink run with a fresh tracker attached.
inline std::vector<Event> run_tracked(Pipeline& p, const std::vector<Event>& in) {
  if (!p.tracker()) p.set_tracker(std::make_shared<EventTracker>());
  return p.feed({in}).at(0);
}

inline std::vector<Event> run_untracked(Pipeline& p, const std::vector<Event>& in) {
  return p.feed({in}).at(0);
}

/// Flattened source positions explaining sink output `pos`.
inline std::vector<Position> explain_positions(const Pipeline& p, Position pos, std::size_t sink = 0) {
  const auto port = p.sinks().at(sink);
  const auto dag = p.tracker()->get_provenance_tree({port.processor, Side::kOutput, port.pipe, pos});
  std::vector<Position> out;
  for (const auto& n : flatten(dag)) out.push_back(n.pointer.position);
  return out;
}

/// Input positions directly associated with one output of one processor.
inline std::vector<Position> associated_inputs(const EventTracker& t, ProcessorId id, Position out_pos,
                                               std::size_t out_pipe = 0) {
  std::vector<Position> out;
  for (const auto& [pipe, pos] : t.associations_of(id, out_pipe, out_pos)) out.push_back(pos);
  return out;
}

}  // namespace testing_support
