#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "provstream/processor.hpp"
#include "provstream/tracker.hpp"

namespace provstream {

/// Directed acyclic graph of processors joined pipe to pipe, with designated
/// source (input) and sink (output) ports and an optional shared tracker.
///
/// Evaluation is push-based: each event pushed into a source travels through
/// the graph to completion before push() returns.
class Pipeline {
 public:
  using SinkCallback = std::function<void(std::size_t sink, Position pos, const Event& e)>;

  Pipeline() = default;
  explicit Pipeline(std::shared_ptr<EventTracker> tracker) : tracker_(std::move(tracker)) {}

  Pipeline(Pipeline&&) noexcept = default;
  Pipeline& operator=(Pipeline&&) noexcept = default;

  /// Single-processor pipeline with source in0 and sink out0.
  static Pipeline of(std::unique_ptr<Processor> p);

  /// Next never-issued processor id.
  ProcessorId fresh_id() { return next_id_++; }

  /// Takes ownership, assigns a fresh id and attaches the pipeline's tracker.
  ProcessorId add(std::unique_ptr<Processor> p);

  template <typename P, typename... Args>
  ProcessorId emplace(Args&&... args) {
    return add(std::make_unique<P>(std::forward<Args>(args)...));
  }

  /// Joins up.out_pipe to down.in_pipe. Throws Error with kUnknownProcessor,
  /// kInvalidPipe, kDuplicateInputConnection, kCycleDetected or kTypeMismatch.
  void connect(ProcessorId up, std::size_t out_pipe, ProcessorId down, std::size_t in_pipe);

  std::size_t add_source(ProcessorId p, std::size_t in_pipe = 0);
  std::size_t add_sink(ProcessorId p, std::size_t out_pipe = 0);

  /// Attaches a tracker and registers every processor, connection and source
  /// already present.
  void set_tracker(std::shared_ptr<EventTracker> tracker);
  EventTracker* tracker() const { return tracker_.get(); }
  const std::shared_ptr<EventTracker>& shared_tracker() const { return tracker_; }

  void push(std::size_t source, const Event& e, const SinkCallback& on_output);

  /// Pushes one sequence per source (interleaved by position) and collects one
  /// output sequence per sink.
  std::vector<std::vector<Event>> feed(const std::vector<std::vector<Event>>& inputs);

  /// Same topology and ids with fresh processor state and no tracker.
  Pipeline fresh_copy() const;

  Processor& processor(ProcessorId id) const;
  const std::vector<PortRef>& sources() const { return sources_; }
  const std::vector<PortRef>& sinks() const { return sinks_; }
  const std::vector<ConnectionRecord>& connections() const { return connections_; }
  std::size_t size() const { return processors_.size(); }

  EventType source_type(std::size_t source) const;
  EventType sink_type(std::size_t sink) const;

  /// Events pushed into a source so far.
  Position consumed(std::size_t source) const { return consumed_.at(source); }

  std::size_t retained_bytes() const;

 private:
  bool reaches(ProcessorId from, ProcessorId to) const;
  void register_all();

  std::shared_ptr<EventTracker> tracker_;
  std::map<ProcessorId, std::unique_ptr<Processor>> processors_;
  std::vector<ConnectionRecord> connections_;
  std::map<PortRef, std::vector<PortRef>> downstream_;  // output -> inputs
  std::vector<PortRef> sources_;
  std::vector<PortRef> sinks_;
  std::vector<Position> consumed_;
  ProcessorId next_id_ = 0;
};

}  // namespace provstream
