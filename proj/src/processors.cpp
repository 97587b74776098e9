#include "provstream/processors.hpp"

#include <algorithm>

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

std::vector<Position> explaining_sources(const EventTracker& tracker, const Pipeline& pipeline,
                                         std::size_t sink, Position pos) {
  const auto& port = pipeline.sinks().at(sink);
  const auto dag = tracker.get_provenance_tree({port.processor, Side::kOutput, port.pipe, pos});
  std::vector<Position> out;
  for (const auto& node : flatten(dag)) out.push_back(node.pointer.position);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fork::Fork(std::size_t fan_out) : Processor(1, fan_out) {
  if (fan_out == 0) throw Error(Errc::kContractViolation, "Fork needs at least one output pipe");
}

void Fork::compute(std::span<const Event> front, Position pos) {
  for (std::size_t pipe = 0; pipe < out_arity(); ++pipe) {
    const auto out = emit(pipe, front[0]);
    associate(pipe, out, 0, pos);
  }
}

CountDecimate::CountDecimate(std::size_t interval) : Processor(1, 1), interval_(interval) {
  if (interval == 0) throw Error(Errc::kContractViolation, "CountDecimate interval must be >= 1");
}

void CountDecimate::compute(std::span<const Event> front, Position pos) {
  if (pos % interval_ != 0) return;
  const auto out = emit(0, front[0]);
  associate(0, out, 0, pos);
}

void Trim::compute(std::span<const Event> front, Position pos) {
  if (pos < count_) return;
  const auto out = emit(0, front[0]);
  associate(0, out, 0, pos);
}

void Filter::compute(std::span<const Event> front, Position pos) {
  if (!front[1].is_bool()) {
    throw Error(Errc::kTypeMismatch, "Filter control event must be boolean, got " +
                                         std::string(event_type_name(front[1].type())));
  }
  if (!front[1].as_bool()) return;
  const auto out = emit(0, front[0]);
  associate(0, out, 0, pos);
  associate(0, out, 1, pos);
}

ApplyFunction::ApplyFunction(LineageFunction f, std::size_t arity)
    : Processor(f.arity().value_or(arity), 1), function_(std::move(f)) {}

void ApplyFunction::compute(std::span<const Event> front, Position pos) {
  auto result = function_.eval_with_lineage(front);
  const auto out = emit(0, std::move(result.value));
  for (auto arg : result.contributors) associate(0, out, arg, pos);
}

Cumulate::Cumulate(LineageFunction f) : Processor(1, 1), function_(std::move(f)) {
  if (function_.arity() && *function_.arity() != 2) {
    throw Error(Errc::kContractViolation, "Cumulate needs a binary function, got " + function_.name());
  }
}

void Cumulate::compute(std::span<const Event> front, Position pos) {
  if (!accumulated_) {
    if (!compatible(front[0].type(), function_.arg_type())) {
      throw Error(Errc::kTypeMismatch, name() + " cannot accumulate a " +
                                           event_type_name(front[0].type()) + " event");
    }
    accumulated_ = front[0];
    explaining_ = {pos};
  } else {
    const Event args[2] = {*accumulated_, front[0]};
    auto result = function_.eval_with_lineage(args);
    const bool uses_acc = std::find(result.contributors.begin(), result.contributors.end(), 0) !=
                          result.contributors.end();
    const bool uses_input = std::find(result.contributors.begin(), result.contributors.end(), 1) !=
                            result.contributors.end();
    if (!uses_acc) explaining_.clear();
    if (uses_input) explaining_.push_back(pos);
    accumulated_ = std::move(result.value);
  }
  const auto out = emit(0, *accumulated_);
  for (auto in : explaining_) associate(0, out, 0, in);
}

std::size_t Cumulate::retained_bytes() const {
  std::size_t total = Processor::retained_bytes();
  if (accumulated_) total += size_model::event_bytes(*accumulated_);
  return total + explaining_.size() * size_model::kPositionBytes;
}

void TurnInto::compute(std::span<const Event>, Position) { emit(0, constant_); }

Window::Window(Pipeline inner, std::size_t width) : Processor(1, 1), inner_(std::move(inner)), width_(width) {
  if (width == 0) throw Error(Errc::kContractViolation, "Window width must be >= 1");
  if (inner_.sources().size() != 1 || inner_.sinks().size() != 1) {
    throw Error(Errc::kContractViolation, "Window needs a pipeline with one source and one sink");
  }
}

Window::Window(std::unique_ptr<Processor> inner, std::size_t width)
    : Window(Pipeline::of(std::move(inner)), width) {}

void Window::compute(std::span<const Event> front, Position pos) {
  buffer_.push_back(front[0]);
  if (buffer_.size() > width_) buffer_.pop_front();
  if (buffer_.size() < width_) return;

  const Position start = pos + 1 - width_;
  Pipeline run = inner_.fresh_copy();
  std::shared_ptr<EventTracker> scratch;
  if (tracking()) {
    scratch = std::make_shared<EventTracker>();
    run.set_tracker(scratch);
  }
  std::optional<Event> last;
  Position last_pos = 0;
  std::size_t count = 0;
  for (const auto& e : buffer_) {
    run.push(0, e, [&](std::size_t, Position p, const Event& out) {
      last = out;
      last_pos = p;
      ++count;
    });
  }
  if (count < width_) {
    throw Error(Errc::kContractViolation, name() + ": inner pipeline emitted " + std::to_string(count) +
                                              " events for " + std::to_string(width_) + " inputs");
  }
  const auto out = emit(0, *last);
  if (scratch) {
    for (auto k : explaining_sources(*scratch, run, 0, last_pos)) associate(0, out, 0, k + start);
  }
}

std::size_t Window::retained_bytes() const {
  std::size_t total = Processor::retained_bytes();
  for (const auto& e : buffer_) total += size_model::event_bytes(e);
  return total;
}

Slice::Slice(LineageFunction slicer, Pipeline prototype, LineageFunction aggregator)
    : Processor(1, 1),
      slicer_(std::move(slicer)),
      prototype_(std::move(prototype)),
      aggregator_(std::move(aggregator)) {
  if (prototype_.sources().size() != 1 || prototype_.sinks().size() != 1) {
    throw Error(Errc::kContractViolation, "Slice needs a pipeline with one source and one sink");
  }
  if (!aggregator_.variadic()) {
    throw Error(Errc::kContractViolation, "Slice aggregator must accept any number of arguments");
  }
}

void Slice::compute(std::span<const Event> front, Position pos) {
  const Event key = slicer_(front.first(1));
  auto [it, inserted] = index_.try_emplace(key, slices_.size());
  if (inserted) {
    Instance inst{key, prototype_.fresh_copy(), {}, std::nullopt, 0};
    if (tracking()) inst.pipeline.set_tracker(std::make_shared<EventTracker>());
    slices_.push_back(std::move(inst));
  }
  Instance& slice = slices_[it->second];
  slice.global_positions.push_back(pos);
  slice.pipeline.push(0, front[0], [&slice](std::size_t, Position p, const Event& out) {
    slice.last_output = out;
    slice.last_output_pos = p;
  });

  std::vector<Event> args;
  std::vector<std::size_t> arg_slice;
  for (std::size_t s = 0; s < slices_.size(); ++s) {
    if (!slices_[s].last_output) continue;
    args.push_back(*slices_[s].last_output);
    arg_slice.push_back(s);
  }
  if (args.empty()) return;

  auto result = aggregator_.eval_with_lineage(args);
  const auto out = emit(0, std::move(result.value));
  if (!tracking()) return;
  for (auto arg : result.contributors) {
    const Instance& contributing = slices_[arg_slice[arg]];
    const auto* private_tracker = contributing.pipeline.tracker();
    if (private_tracker == nullptr) continue;
    for (auto local : explaining_sources(*private_tracker, contributing.pipeline, 0,
                                         contributing.last_output_pos)) {
      associate(0, out, 0, contributing.global_positions.at(local));
    }
  }
}

std::size_t Slice::retained_bytes() const {
  std::size_t total = Processor::retained_bytes();
  for (const auto& s : slices_) {
    total += size_model::event_bytes(s.key) + s.pipeline.retained_bytes() +
             s.global_positions.size() * size_model::kPositionBytes;
    if (s.last_output) total += size_model::event_bytes(*s.last_output);
    if (const auto* t = s.pipeline.tracker()) total += size_model::tracker_bytes(*t);
  }
  return total;
}

}  // namespace provstream
