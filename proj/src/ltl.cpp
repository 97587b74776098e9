#include "provstream/ltl.hpp"

#include "provstream/error.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

namespace {

bool boolean_input(const Processor& p, const Event& e) {
  if (!e.is_bool()) {
    throw Error(Errc::kTypeMismatch,
                p.name() + " expects boolean input, got " + event_type_name(e.type()));
  }
  return e.as_bool();
}

}  // namespace

void Globally::compute(std::span<const Event> front, Position pos) {
  ++pending_;
  if (boolean_input(*this, front[0])) return;
  for (; pending_ > 0; --pending_) {
    const auto out = emit(0, false);
    associate(0, out, 0, pos);
  }
}

std::size_t Globally::retained_bytes() const {
  return Processor::retained_bytes() + size_model::kPositionBytes;
}

void Eventually::compute(std::span<const Event> front, Position pos) {
  ++pending_;
  if (!boolean_input(*this, front[0])) return;
  for (; pending_ > 0; --pending_) {
    const auto out = emit(0, true);
    associate(0, out, 0, pos);
  }
}

std::size_t Eventually::retained_bytes() const {
  return Processor::retained_bytes() + size_model::kPositionBytes;
}

void Next::compute(std::span<const Event> front, Position pos) {
  if (pos == 0) return;
  const auto out = emit(0, front[0]);
  associate(0, out, 0, pos);
}

void Until::compute(std::span<const Event> front, Position pos) {
  const bool left = boolean_input(*this, front[0]);
  const bool right = boolean_input(*this, front[1]);
  ++pending_;
  if (!right && left) return;
  const std::size_t cause = right ? 1 : 0;
  for (; pending_ > 0; --pending_) {
    const auto out = emit(0, right);
    associate(0, out, cause, pos);
  }
}

std::size_t Until::retained_bytes() const {
  return Processor::retained_bytes() + size_model::kPositionBytes;
}

}  // namespace provstream
