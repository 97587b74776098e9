#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "provstream/function.hpp"
#include "provstream/processor.hpp"

namespace provstream {

using StateId = std::size_t;

/// Moore machine with function-guarded transitions and state-labelled outputs.
///
/// For lineage the machine keeps a history of (state, event, position)
/// triplets. After each transition the new triplet is appended, the output is
/// associated with every position in the history, and the history is then cut
/// back to the earliest triplet holding the new state. What remains is a
/// loop-free path from the initial state, so the history never holds more
/// triplets than there are states.
class MooreMachine : public Processor {
 public:
  struct Transition {
    LineageFunction guard;  // event -> boolean
    StateId target;
  };

  struct Triplet {
    StateId state;
    Event event;
    Position position;
  };

  explicit MooreMachine(StateId initial);

  /// Guards of one state are tried in insertion order; the first ⊤ wins.
  MooreMachine& add_transition(StateId from, LineageFunction guard, StateId to);
  MooreMachine& set_output(StateId state, Event output);

  std::string name() const override { return "MooreMachine"; }
  std::unique_ptr<Processor> clone() const override;
  std::size_t retained_bytes() const override;

  StateId state() const { return current_; }
  const std::vector<Triplet>& history() const { return history_; }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  StateId initial_;
  StateId current_;
  std::map<StateId, std::vector<Transition>> transitions_;
  std::map<StateId, Event> outputs_;
  std::vector<Triplet> history_;
};

/// Process-lifecycle monitor over action names. States: 0 initial, 1 after
/// "a", 2 after "b", 3 completed after "d", 4 error sink. "c" returns to
/// state 1, so accepted runs read a b (c b)* d. States 1-3 output ⊤, the
/// sink outputs ⊥, and any unexpected action leads to the sink.
std::unique_ptr<MooreMachine> make_lifecycle_machine();

}  // namespace provstream
