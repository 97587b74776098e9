#include "provstream/processor.hpp"

#include <algorithm>

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

Processor::Processor(std::size_t in_arity, std::size_t out_arity)
    : pending_(in_arity), produced_(out_arity, 0) {}

EventType Processor::input_type(std::size_t) const { return EventType::kAny; }

EventType Processor::output_type(std::size_t) const { return EventType::kAny; }

void Processor::push(std::size_t pipe, const Event& e, std::vector<Emission>& out) {
  if (pipe >= pending_.size()) {
    throw Error(Errc::kInvalidPipe, name() + " has no input pipe " + std::to_string(pipe));
  }
  pending_[pipe].push_back(e);
  const auto ready = [this] {
    return std::all_of(pending_.begin(), pending_.end(), [](const auto& q) { return !q.empty(); });
  };
  if (!ready()) return;

  outbox_ = &out;
  std::vector<Event> front;
  front.reserve(pending_.size());
  while (ready()) {
    front.clear();
    for (auto& q : pending_) {
      front.push_back(std::move(q.front()));
      q.pop_front();
    }
    try {
      compute(front, fronts_++);
    } catch (...) {
      outbox_ = nullptr;
      throw;
    }
  }
  outbox_ = nullptr;
}

Position Processor::emit(std::size_t pipe, Event e) {
  const Position pos = produced_.at(pipe)++;
  if (tracker_ != nullptr) tracker_->record_output(id_, pipe, pos, e);
  outbox_->push_back(Emission{pipe, pos, std::move(e)});
  return pos;
}

void Processor::associate(std::size_t out_pipe, Position out_pos, std::size_t in_pipe,
                          Position in_pos) {
  if (tracker_ == nullptr) return;
  tracker_->associate(Association{id_, out_pipe, out_pos, in_pipe, in_pos});
}

std::size_t Processor::retained_bytes() const {
  std::size_t total = size_model::kProcessorBaseBytes;
  for (const auto& q : pending_) {
    for (const auto& e : q) total += size_model::event_bytes(e);
  }
  return total;
}

}  // namespace provstream
