#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "provstream/function.hpp"
#include "provstream/pipeline.hpp"
#include "provstream/processor.hpp"

namespace provstream {

/// Copies each input event to every output pipe.
class Fork : public Processor {
 public:
  explicit Fork(std::size_t fan_out);

  std::string name() const override { return "Fork"; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Fork>(out_arity()); }

 protected:
  void compute(std::span<const Event> front, Position pos) override;
};

/// Keeps every n-th event, starting with the first.
class CountDecimate : public Processor {
 public:
  explicit CountDecimate(std::size_t interval);

  std::string name() const override { return "CountDecimate(" + std::to_string(interval_) + ")"; }
  std::unique_ptr<Processor> clone() const override {
    return std::make_unique<CountDecimate>(interval_);
  }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  std::size_t interval_;
};

/// Drops the first n events.
class Trim : public Processor {
 public:
  explicit Trim(std::size_t count) : Processor(1, 1), count_(count) {}

  std::string name() const override { return "Trim(" + std::to_string(count_) + ")"; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Trim>(count_); }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  std::size_t count_;
};

/// Lets pipe 0's event through when pipe 1 carries ⊤ at the same position.
class Filter : public Processor {
 public:
  Filter() : Processor(2, 1) {}

  std::string name() const override { return "Filter"; }
  EventType input_type(std::size_t pipe) const override {
    return pipe == 1 ? EventType::kBoolean : EventType::kAny;
  }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Filter>(); }

 protected:
  void compute(std::span<const Event> front, Position pos) override;
};

/// Lifts an n-ary function to a processor over n input pipes.
class ApplyFunction : public Processor {
 public:
  /// `arity` is only consulted for variadic functions.
  explicit ApplyFunction(LineageFunction f, std::size_t arity = 1);

  std::string name() const override { return function_.name(); }
  EventType input_type(std::size_t) const override { return function_.arg_type(); }
  EventType output_type(std::size_t) const override { return function_.result_type(); }
  std::unique_ptr<Processor> clone() const override {
    return std::make_unique<ApplyFunction>(function_, in_arity());
  }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  LineageFunction function_;
};

/// Running fold of a binary function. Output i = f(output i-1, input i), and
/// output 0 is input 0. Lineage chains the function's own rule: a running
/// set of explaining positions is replaced, kept or extended depending on
/// which operands explain each step.
class Cumulate : public Processor {
 public:
  explicit Cumulate(LineageFunction f);

  std::string name() const override { return "Cumulate(" + function_.name() + ")"; }
  EventType input_type(std::size_t) const override { return function_.arg_type(); }
  EventType output_type(std::size_t) const override { return function_.result_type(); }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Cumulate>(function_); }
  std::size_t retained_bytes() const override;

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  LineageFunction function_;
  std::optional<Event> accumulated_;
  std::vector<Position> explaining_;
};

/// Replaces every input with a constant. Registers no association: the
/// output does not depend on the input value.
class TurnInto : public Processor {
 public:
  explicit TurnInto(Event constant) : Processor(1, 1), constant_(std::move(constant)) {}

  std::string name() const override { return "TurnInto(" + to_string(constant_, {.ascii = true}) + ")"; }
  EventType output_type(std::size_t) const override { return constant_.type(); }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<TurnInto>(constant_); }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  Event constant_;
};

/// Evaluates a one-in/one-out pipeline on every sliding window of `width`
/// events. Each window runs on a fresh copy of the inner pipeline; output j is
/// that copy's last output, explained by the copy's own lineage shifted by j.
class Window : public Processor {
 public:
  Window(Pipeline inner, std::size_t width);
  Window(std::unique_ptr<Processor> inner, std::size_t width);

  std::string name() const override { return "Window(" + std::to_string(width_) + ")"; }
  EventType input_type(std::size_t) const override { return inner_.source_type(0); }
  EventType output_type(std::size_t) const override { return inner_.sink_type(0); }
  std::unique_ptr<Processor> clone() const override {
    return std::make_unique<Window>(inner_.fresh_copy(), width_);
  }
  std::size_t retained_bytes() const override;

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  Pipeline inner_;
  std::size_t width_;
  std::deque<Event> buffer_;
};

/// Routes each event to a private copy of a one-in/one-out pipeline chosen by
/// a key function, then aggregates the last output of every slice (ordered by
/// first appearance of its key) with a variadic function.
class Slice : public Processor {
 public:
  Slice(LineageFunction slicer, Pipeline prototype, LineageFunction aggregator);

  std::string name() const override { return "Slice(" + slicer_.name() + ")"; }
  EventType input_type(std::size_t) const override { return prototype_.source_type(0); }
  EventType output_type(std::size_t) const override { return aggregator_.result_type(); }
  std::unique_ptr<Processor> clone() const override {
    return std::make_unique<Slice>(slicer_, prototype_.fresh_copy(), aggregator_);
  }
  std::size_t retained_bytes() const override;

  std::size_t slice_count() const { return slices_.size(); }
  const Event& slice_key(std::size_t slice) const { return slices_.at(slice).key; }
  /// Global input positions routed to a slice, in arrival order.
  const std::vector<Position>& slice_positions(std::size_t slice) const {
    return slices_.at(slice).global_positions;
  }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  struct Instance {
    Event key;
    Pipeline pipeline;
    std::vector<Position> global_positions;  // slice-local position -> global
    std::optional<Event> last_output;
    Position last_output_pos = 0;
  };

  LineageFunction slicer_;
  Pipeline prototype_;
  LineageFunction aggregator_;
  std::vector<Instance> slices_;
  std::unordered_map<Event, std::size_t, EventHash> index_;
};

/// Source positions explaining the given sink output of a tracked pipeline.
std::vector<Position> explaining_sources(const EventTracker& tracker, const Pipeline& pipeline,
                                         std::size_t sink, Position pos);

}  // namespace provstream
