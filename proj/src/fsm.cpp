#include "provstream/fsm.hpp"

#include <algorithm>

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

MooreMachine::MooreMachine(StateId initial) : Processor(1, 1), initial_(initial), current_(initial) {}

MooreMachine& MooreMachine::add_transition(StateId from, LineageFunction guard, StateId to) {
  transitions_[from].push_back({std::move(guard), to});
  return *this;
}

MooreMachine& MooreMachine::set_output(StateId state, Event output) {
  outputs_.insert_or_assign(state, std::move(output));
  return *this;
}

std::unique_ptr<Processor> MooreMachine::clone() const {
  auto copy = std::make_unique<MooreMachine>(initial_);
  copy->transitions_ = transitions_;
  copy->outputs_ = outputs_;
  return copy;
}

void MooreMachine::compute(std::span<const Event> front, Position pos) {
  const Event& e = front[0];
  const auto* target = [&]() -> const StateId* {
    auto it = transitions_.find(current_);
    if (it == transitions_.end()) return nullptr;
    for (const auto& t : it->second) {
      if (t.guard(front.first(1)).as_bool()) return &t.target;
    }
    return nullptr;
  }();
  if (target == nullptr) {
    throw Error(Errc::kNoFireableTransition, "no transition from state " + std::to_string(current_) +
                                                 " on event " + to_string(e, {.ascii = true}));
  }
  auto out_it = outputs_.find(*target);
  if (out_it == outputs_.end()) {
    throw Error(Errc::kContractViolation, "state " + std::to_string(*target) + " has no output");
  }

  current_ = *target;
  history_.push_back({current_, e, pos});
  const auto out = emit(0, out_it->second);
  for (const auto& t : history_) associate(0, out, 0, t.position);

  // The initial state has no triplet, so returning to it empties the path.
  if (current_ == initial_) {
    history_.clear();
    return;
  }
  auto first = std::find_if(history_.begin(), history_.end(),
                            [this](const Triplet& t) { return t.state == current_; });
  history_.erase(first + 1, history_.end());
}

std::size_t MooreMachine::retained_bytes() const {
  std::size_t total = Processor::retained_bytes();
  for (const auto& t : history_) total += size_model::kTripletBytes + size_model::event_bytes(t.event);
  return total;
}

std::unique_ptr<MooreMachine> make_lifecycle_machine() {
  auto m = std::make_unique<MooreMachine>(0);
  const auto is = [](const char* action) { return fn::equals_constant(Event(action)); };
  const auto otherwise = [] {
    return LineageFunction("*", 1, EventType::kAny, EventType::kBoolean,
                           [](std::span<const Event>) { return LineageResult{true, {0}}; });
  };
  constexpr StateId kSink = 4;
  m->add_transition(0, is("a"), 1).add_transition(0, otherwise(), kSink);
  m->add_transition(1, is("b"), 2).add_transition(1, otherwise(), kSink);
  m->add_transition(2, is("c"), 1).add_transition(2, is("d"), 3).add_transition(2, otherwise(), kSink);
  m->add_transition(3, otherwise(), kSink);
  m->add_transition(kSink, otherwise(), kSink);
  m->set_output(0, true).set_output(1, true).set_output(2, true).set_output(3, true);
  m->set_output(kSink, false);
  return m;
}

}  // namespace provstream
