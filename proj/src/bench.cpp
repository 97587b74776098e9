#include "provstream/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "provstream/pipeline.hpp"
#include "provstream/queries.hpp"
#include "provstream/size_model.hpp"

namespace provstream {

namespace {

Event lifecycle_event(double id, const char* action) {
  return Event::tuple({{"id", id}, {"action", std::string(action)}});
}

std::vector<Event> lifecycle_log(std::size_t length, std::mt19937_64& rng) {
  static constexpr const char* kActions[] = {"a", "b", "c", "d"};
  std::uniform_int_distribution<int> pick_id(1, 5);
  std::uniform_int_distribution<int> pick_action(0, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::map<int, int> stage;  // 0 fresh, 1 after a, 2 after b, 3 done
  std::vector<Event> log;
  log.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const int id = pick_id(rng);
    int& s = stage[id];
    const char* action = nullptr;
    if (coin(rng) < 0.002 || s == 3) {
      action = kActions[pick_action(rng)];
    } else if (s == 0) {
      action = "a";
      s = 1;
    } else if (s == 1) {
      action = "b";
      s = 2;
    } else if (coin(rng) < 0.02) {
      action = "d";
      s = 3;
    } else {
      action = "c";
      s = 1;
    }
    log.push_back(lifecycle_event(id, action));
  }
  return log;
}

}  // namespace

std::vector<Event> generate_log(std::string_view query, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Event> log;
  log.reserve(length);
  if (query == "window-product") {
    std::uniform_int_distribution<int> digit(0, 9);
    for (std::size_t i = 0; i < length; ++i) log.emplace_back(digit(rng));
  } else if (query == "process-lifecycle") {
    log = lifecycle_log(length, rng);
  } else if (query == "ltl-property") {
    static constexpr const char* kActions[] = {"a", "b", "c", "d"};
    std::uniform_int_distribution<int> action(0, 3);
    std::uniform_int_distribution<int> value(-3, 9);
    for (std::size_t i = 0; i < length; ++i) {
      const char* a = kActions[action(rng)];
      const double p = value(rng);
      log.push_back(Event::tuple({{"action", std::string(a)}, {"p", p}}));
    }
  } else {
    throw std::invalid_argument("unknown query '" + std::string(query) + "'");
  }
  return log;
}

std::size_t estimate_retained_bytes(const EventTracker& tracker) {
  return size_model::tracker_bytes(tracker);
}

std::size_t estimate_retained_bytes(const Pipeline& pipeline) { return pipeline.retained_bytes(); }

BenchReport run_bench(const BenchOptions& options) {
  const auto* query = find_query(options.query);
  if (query == nullptr) throw std::invalid_argument("unknown query '" + options.query + "'");
  if (options.length == 0) throw std::invalid_argument("benchmark length must be >= 1");

  const auto log = generate_log(options.query, options.length, options.seed);
  BenchReport report;
  report.query = options.query;
  report.tracker = options.tracker;
  report.events = log.size();

  auto make = [&] {
    Pipeline p = query->build();
    if (options.tracker) p.set_tracker(std::make_shared<EventTracker>());
    return p;
  };

  // Timed passes carry no sampling work.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repeats); ++r) {
    Pipeline p = make();
    std::size_t outputs = 0;
    const auto count = [&outputs](std::size_t, Position, const Event&) { ++outputs; };
    const auto start = std::chrono::steady_clock::now();
    for (const auto& e : log) p.push(0, e, count);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
    report.outputs = outputs;
  }
  report.seconds = best;
  report.throughput = best > 0 ? static_cast<double>(log.size()) / best : 0;

  const std::size_t k = std::max<std::size_t>(1, options.samples);
  Pipeline p = make();
  std::size_t next = 0;
  for (std::size_t i = 0; i < log.size(); ++i) {
    p.push(0, log[i], nullptr);
    const std::size_t boundary = (next + 1) * log.size() / k;
    if (i + 1 == boundary) {
      MemorySample s;
      s.events = i + 1;
      s.tracker_bytes = p.tracker() ? estimate_retained_bytes(*p.tracker()) : 0;
      s.processor_bytes = estimate_retained_bytes(p);
      report.samples.push_back(s);
      ++next;
    }
  }
  return report;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = std::min(xs.size(), ys.size());
  LinearFit fit;
  if (n == 0) return fit;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0) {
    fit.r2 = 1;
  } else {
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ss_res += r * r;
    }
    fit.r2 = 1 - ss_res / syy;
  }
  return fit;
}

std::string size_model_description() {
  using namespace size_model;
  std::ostringstream out;
  out << "size model (bytes): event=" << kEventBytes << "+text, tuple field=" << kFieldBytes
      << "+name, tracker base=" << kTrackerBaseBytes << ", processor record=" << kProcessorInfoBytes
      << ", association=" << kAssociationBytes << ", connection=" << kConnectionBytes
      << ", source=" << kSourceBytes << ", value record=" << kValueRecordBytes << "+event"
      << ", processor base=" << kProcessorBaseBytes << ", position=" << kPositionBytes
      << ", moore triplet=" << kTripletBytes << "+event";
  return out.str();
}

std::string report_table(const BenchReport& report) {
  std::ostringstream out;
  out << "# " << size_model_description() << "\n";
  out << "query: " << report.query << "\n";
  out << "tracker: " << (report.tracker ? "on" : "off") << "\n";
  out << "events: " << report.events << "\n";
  out << "outputs: " << report.outputs << "\n";
  out << std::fixed << std::setprecision(6) << "seconds: " << report.seconds << "\n";
  out << std::setprecision(0) << "throughput: " << report.throughput << " events/s\n";
  out << "events\ttracker_bytes\tprocessor_bytes\ttotal_bytes\n";
  for (const auto& s : report.samples) {
    out << s.events << '\t' << s.tracker_bytes << '\t' << s.processor_bytes << '\t' << s.total()
        << '\n';
  }
  return out.str();
}

std::string report_json(const BenchReport& report) {
  nlohmann::ordered_json j;
  j["size_model"] = size_model_description();
  j["query"] = report.query;
  j["tracker"] = report.tracker;
  j["events"] = report.events;
  j["outputs"] = report.outputs;
  j["seconds"] = report.seconds;
  j["throughput"] = report.throughput;
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"events", s.events},
                       {"tracker_bytes", s.tracker_bytes},
                       {"processor_bytes", s.processor_bytes},
                       {"total_bytes", s.total()}});
  }
  j["samples"] = std::move(samples);
  return j.dump(2);
}

}  // namespace provstream
