#pragma once

#include <cstddef>

#include "provstream/event.hpp"

namespace provstream {

class EventTracker;

// Deterministic retained-size model. Sizes are nominal byte costs for a
// 64-bit build, not heap measurements; they are stable across runs and
// platforms so that growth shapes can be compared.
namespace size_model {

inline constexpr std::size_t kEventBytes = 16;         // tagged scalar slot
inline constexpr std::size_t kFieldBytes = 32;         // tuple field header, name excluded
inline constexpr std::size_t kTrackerBaseBytes = 256;  // tracker object and empty containers
inline constexpr std::size_t kProcessorInfoBytes = 96;
inline constexpr std::size_t kAssociationBytes = 40;   // (processor, out pipe, out pos) -> (in pipe, in pos)
inline constexpr std::size_t kConnectionBytes = 32;
inline constexpr std::size_t kSourceBytes = 16;
inline constexpr std::size_t kValueRecordBytes = 8;    // slot overhead of a recorded event value
inline constexpr std::size_t kProcessorBaseBytes = 64;
inline constexpr std::size_t kPositionBytes = 8;
inline constexpr std::size_t kTripletBytes = 24;       // Moore history entry, event excluded

std::size_t event_bytes(const Event& e);

std::size_t tracker_bytes(const EventTracker& tracker);

}  // namespace size_model

}  // namespace provstream
