#pragma once

#include <memory>
#include <string>

#include "provstream/processor.hpp"

namespace provstream {

// Streaming LTL operators. Output i is the verdict for the suffix starting at
// input i; it is emitted as soon as that verdict is definite, so G, F and U
// hold back pending positions and release them in bursts. Each burst forms a
// zone whose outputs are all explained by the single input that decided it.

/// G: a ⊥ input decides ⊥ for every pending position up to and including it.
class Globally : public Processor {
 public:
  Globally() : Processor(1, 1) {}

  std::string name() const override { return "G"; }
  EventType input_type(std::size_t) const override { return EventType::kBoolean; }
  EventType output_type(std::size_t) const override { return EventType::kBoolean; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Globally>(); }
  std::size_t retained_bytes() const override;

  Position pending() const { return pending_; }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  Position pending_ = 0;
};

/// F: dual of G, a ⊤ input decides ⊤ for every pending position.
class Eventually : public Processor {
 public:
  Eventually() : Processor(1, 1) {}

  std::string name() const override { return "F"; }
  EventType input_type(std::size_t) const override { return EventType::kBoolean; }
  EventType output_type(std::size_t) const override { return EventType::kBoolean; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Eventually>(); }
  std::size_t retained_bytes() const override;

  Position pending() const { return pending_; }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  Position pending_ = 0;
};

/// X: output i-1 is input i. Accepts events of any type.
class Next : public Processor {
 public:
  Next() : Processor(1, 1) {}

  std::string name() const override { return "X"; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Next>(); }

 protected:
  void compute(std::span<const Event> front, Position pos) override;
};

/// U over (left, right) fronts. Right ⊤ decides ⊤ (explained by the right
/// input); left ⊥ with right ⊥ decides ⊥ (explained by the left input).
class Until : public Processor {
 public:
  Until() : Processor(2, 1) {}

  std::string name() const override { return "U"; }
  EventType input_type(std::size_t) const override { return EventType::kBoolean; }
  EventType output_type(std::size_t) const override { return EventType::kBoolean; }
  std::unique_ptr<Processor> clone() const override { return std::make_unique<Until>(); }
  std::size_t retained_bytes() const override;

  Position pending() const { return pending_; }

 protected:
  void compute(std::span<const Event> front, Position pos) override;

 private:
  Position pending_ = 0;
};

}  // namespace provstream
