#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "provstream/event.hpp"
#include "provstream/tracker.hpp"

namespace provstream {

class Pipeline;

/// Seeded synthetic log for a built-in query:
///  - window-product: integers uniform in 0..9
///  - process-lifecycle: (id, action) with ids 1..5 mostly following the
///    lifecycle, with rare completions and protocol violations
///  - ltl-property: (action, p) with actions a..d and p uniform in -3..9
std::vector<Event> generate_log(std::string_view query, std::size_t length, std::uint64_t seed);

struct MemorySample {
  Position events = 0;
  std::size_t tracker_bytes = 0;
  std::size_t processor_bytes = 0;

  std::size_t total() const { return tracker_bytes + processor_bytes; }
};

struct BenchOptions {
  std::string query;
  std::size_t length = 10000;
  bool tracker = false;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;  // timed passes; the fastest one is reported
};

struct BenchReport {
  std::string query;
  bool tracker = false;
  std::size_t events = 0;
  std::size_t outputs = 0;
  double seconds = 0;
  double throughput = 0;  // events per second
  std::vector<MemorySample> samples;
};

/// Modelled retained bytes of a tracker, or of a pipeline's processors.
std::size_t estimate_retained_bytes(const EventTracker& tracker);
std::size_t estimate_retained_bytes(const Pipeline& pipeline);

/// Unknown query names throw std::invalid_argument.
BenchReport run_bench(const BenchOptions& options);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

/// Least-squares line. A perfectly flat series reports r2 = 1.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

std::string size_model_description();
std::string report_table(const BenchReport& report);
std::string report_json(const BenchReport& report);

}  // namespace provstream
