#include "provstream/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

Pipeline Pipeline::of(std::unique_ptr<Processor> p) {
  Pipeline pipeline;
  const auto id = pipeline.add(std::move(p));
  pipeline.add_source(id, 0);
  pipeline.add_sink(id, 0);
  return pipeline;
}

ProcessorId Pipeline::add(std::unique_ptr<Processor> p) {
  const ProcessorId id = fresh_id();
  p->set_id(id);
  p->set_tracker(tracker_.get());
  if (tracker_) tracker_->register_processor(id, p->name(), p->in_arity(), p->out_arity());
  processors_.emplace(id, std::move(p));
  return id;
}

Processor& Pipeline::processor(ProcessorId id) const {
  auto it = processors_.find(id);
  if (it == processors_.end()) {
    throw Error(Errc::kUnknownProcessor, "no processor with id " + std::to_string(id));
  }
  return *it->second;
}

bool Pipeline::reaches(ProcessorId from, ProcessorId to) const {
  std::set<ProcessorId> seen{from};
  std::vector<ProcessorId> stack{from};
  while (!stack.empty()) {
    const auto cur = stack.back();
    stack.pop_back();
    if (cur == to) return true;
    for (const auto& c : connections_) {
      if (c.upstream.processor == cur && seen.insert(c.downstream.processor).second) {
        stack.push_back(c.downstream.processor);
      }
    }
  }
  return false;
}

void Pipeline::connect(ProcessorId up, std::size_t out_pipe, ProcessorId down, std::size_t in_pipe) {
  Processor& src = processor(up);
  Processor& dst = processor(down);
  if (out_pipe >= src.out_arity()) {
    throw Error(Errc::kInvalidPipe, src.name() + " has no output pipe " + std::to_string(out_pipe));
  }
  if (in_pipe >= dst.in_arity()) {
    throw Error(Errc::kInvalidPipe, dst.name() + " has no input pipe " + std::to_string(in_pipe));
  }
  const PortRef input{down, in_pipe};
  const bool taken = std::any_of(connections_.begin(), connections_.end(),
                                 [&](const ConnectionRecord& c) { return c.downstream == input; }) ||
                     std::find(sources_.begin(), sources_.end(), input) != sources_.end();
  if (taken) {
    throw Error(Errc::kDuplicateInputConnection,
                dst.name() + " input pipe " + std::to_string(in_pipe) + " is already connected");
  }
  if (up == down || reaches(down, up)) {
    throw Error(Errc::kCycleDetected, "connecting " + src.name() + " to " + dst.name() + " creates a cycle");
  }
  const auto out_type = src.output_type(out_pipe);
  const auto in_type = dst.input_type(in_pipe);
  if (!compatible(out_type, in_type)) {
    throw Error(Errc::kTypeMismatch, src.name() + " emits " + event_type_name(out_type) + " but " +
                                         dst.name() + " expects " + event_type_name(in_type));
  }
  const ConnectionRecord record{{up, out_pipe}, input};
  connections_.push_back(record);
  downstream_[record.upstream].push_back(input);
  if (tracker_) tracker_->register_connection(record);
}

std::size_t Pipeline::add_source(ProcessorId p, std::size_t in_pipe) {
  Processor& proc = processor(p);
  if (in_pipe >= proc.in_arity()) {
    throw Error(Errc::kInvalidPipe, proc.name() + " has no input pipe " + std::to_string(in_pipe));
  }
  const PortRef port{p, in_pipe};
  const bool taken = std::any_of(connections_.begin(), connections_.end(),
                                 [&](const ConnectionRecord& c) { return c.downstream == port; }) ||
                     std::find(sources_.begin(), sources_.end(), port) != sources_.end();
  if (taken) {
    throw Error(Errc::kDuplicateInputConnection,
                proc.name() + " input pipe " + std::to_string(in_pipe) + " is already connected");
  }
  sources_.push_back(port);
  consumed_.push_back(0);
  if (tracker_) tracker_->register_source(port);
  return sources_.size() - 1;
}

std::size_t Pipeline::add_sink(ProcessorId p, std::size_t out_pipe) {
  Processor& proc = processor(p);
  if (out_pipe >= proc.out_arity()) {
    throw Error(Errc::kInvalidPipe, proc.name() + " has no output pipe " + std::to_string(out_pipe));
  }
  sinks_.push_back({p, out_pipe});
  return sinks_.size() - 1;
}

void Pipeline::set_tracker(std::shared_ptr<EventTracker> tracker) {
  tracker_ = std::move(tracker);
  for (auto& [id, p] : processors_) p->set_tracker(tracker_.get());
  if (tracker_) register_all();
}

void Pipeline::register_all() {
  for (const auto& [id, p] : processors_) {
    tracker_->register_processor(id, p->name(), p->in_arity(), p->out_arity());
  }
  for (const auto& c : connections_) tracker_->register_connection(c);
  for (const auto& s : sources_) tracker_->register_source(s);
}

EventType Pipeline::source_type(std::size_t source) const {
  const auto& port = sources_.at(source);
  return processor(port.processor).input_type(port.pipe);
}

EventType Pipeline::sink_type(std::size_t sink) const {
  const auto& port = sinks_.at(sink);
  return processor(port.processor).output_type(port.pipe);
}

void Pipeline::push(std::size_t source, const Event& e, const SinkCallback& on_output) {
  const PortRef port = sources_.at(source);
  const Position pos = consumed_[source]++;
  if (tracker_) tracker_->record_input(port.processor, port.pipe, pos, e);

  struct Delivery {
    PortRef to;
    Event event;
  };
  std::deque<Delivery> work{{port, e}};
  std::vector<Emission> emitted;
  while (!work.empty()) {
    Delivery d = std::move(work.front());
    work.pop_front();
    emitted.clear();
    processor(d.to.processor).push(d.to.pipe, d.event, emitted);
    for (auto& em : emitted) {
      const PortRef from{d.to.processor, em.pipe};
      for (std::size_t s = 0; s < sinks_.size(); ++s) {
        if (sinks_[s] == from && on_output) on_output(s, em.position, em.event);
      }
      if (auto it = downstream_.find(from); it != downstream_.end()) {
        for (const auto& next : it->second) work.push_back({next, em.event});
      }
    }
  }
}

std::vector<std::vector<Event>> Pipeline::feed(const std::vector<std::vector<Event>>& inputs) {
  std::vector<std::vector<Event>> outputs(sinks_.size());
  const auto collect = [&outputs](std::size_t sink, Position, const Event& e) {
    outputs[sink].push_back(e);
  };
  std::size_t longest = 0;
  for (const auto& in : inputs) longest = std::max(longest, in.size());
  for (std::size_t k = 0; k < longest; ++k) {
    for (std::size_t s = 0; s < inputs.size() && s < sources_.size(); ++s) {
      if (k < inputs[s].size()) push(s, inputs[s][k], collect);
    }
  }
  return outputs;
}

Pipeline Pipeline::fresh_copy() const {
  Pipeline copy;
  for (const auto& [id, p] : processors_) {
    auto fresh = p->clone();
    fresh->set_id(id);
    copy.processors_.emplace(id, std::move(fresh));
  }
  copy.connections_ = connections_;
  copy.downstream_ = downstream_;
  copy.sources_ = sources_;
  copy.sinks_ = sinks_;
  copy.consumed_.assign(sources_.size(), 0);
  copy.next_id_ = next_id_;
  return copy;
}

std::size_t Pipeline::retained_bytes() const {
  std::size_t total = 0;
  for (const auto& [id, p] : processors_) total += p->retained_bytes();
  return total;
}

}  // namespace provstream
