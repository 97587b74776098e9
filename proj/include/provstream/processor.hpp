#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "provstream/event.hpp"
#include "provstream/tracker.hpp"

namespace provstream {

struct Emission {
  std::size_t pipe;
  Position position;
  Event event;
};

/// Stateful stream unit with a fixed number of input and output pipes.
///
/// Events arrive one pipe at a time; the base class buffers each pipe until a
/// complete front (one event per input pipe at the same position) is
/// available and hands it to compute(). Subclasses emit through emit() and
/// report lineage through associate(), which is a no-op while no tracker is
/// attached.
class Processor {
 public:
  Processor(std::size_t in_arity, std::size_t out_arity);
  virtual ~Processor() = default;

  Processor(const Processor&) = delete;
  Processor& operator=(const Processor&) = delete;

  ProcessorId id() const { return id_; }
  std::size_t in_arity() const { return pending_.size(); }
  std::size_t out_arity() const { return produced_.size(); }

  virtual std::string name() const = 0;
  virtual EventType input_type(std::size_t pipe) const;
  virtual EventType output_type(std::size_t pipe) const;

  /// Fresh copy with the same parameters and no accumulated state.
  virtual std::unique_ptr<Processor> clone() const = 0;

  /// Feeds one event into an input pipe and appends whatever the processor
  /// emits in response to `out`.
  void push(std::size_t pipe, const Event& e, std::vector<Emission>& out);

  /// Number of events emitted so far on an output pipe.
  Position produced(std::size_t pipe) const { return produced_.at(pipe); }

  /// Modelled retained size of buffers and internal state, in bytes.
  virtual std::size_t retained_bytes() const;

  // Wiring, normally done by Pipeline.
  void set_id(ProcessorId id) { id_ = id; }
  void set_tracker(EventTracker* tracker) { tracker_ = tracker; }
  EventTracker* tracker() const { return tracker_; }

 protected:
  /// Consumes one complete front; `pos` is the front's position, which equals
  /// the position of each of its events in their input streams.
  virtual void compute(std::span<const Event> front, Position pos) = 0;

  Position emit(std::size_t pipe, Event e);
  void associate(std::size_t out_pipe, Position out_pos, std::size_t in_pipe, Position in_pos);
  bool tracking() const { return tracker_ != nullptr; }

 private:
  ProcessorId id_ = 0;
  EventTracker* tracker_ = nullptr;
  std::vector<std::deque<Event>> pending_;
  std::vector<Position> produced_;
  Position fronts_ = 0;
  std::vector<Emission>* outbox_ = nullptr;
};

}  // namespace provstream
