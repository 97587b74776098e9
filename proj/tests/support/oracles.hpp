#pragma once

// Test-only reference evaluators. None of these reuse the streaming code they
// check: verdicts come from the textbook suffix semantics evaluated on the
// whole prefix, and lineage soundness comes from exhaustive substitution.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "provstream/event.hpp"
#include "provstream/function.hpp"

namespace oracle {

using provstream::Event;
using provstream::LineageFunction;

enum class Temporal { kG, kF, kX, kU };

/// Definite verdict of the operator for the suffix starting at `j`, given
/// only the prefix seen so far, or nullopt when the prefix cannot decide it.
inline std::optional<bool> suffix_verdict(Temporal op, const std::vector<bool>& left,
                                          const std::vector<bool>& right, std::size_t j) {
  const std::size_t n = left.size();
  switch (op) {
    case Temporal::kG:
      for (std::size_t k = j; k < n; ++k) {
        if (!left[k]) return false;
      }
      return std::nullopt;
    case Temporal::kF:
      for (std::size_t k = j; k < n; ++k) {
        if (left[k]) return true;
      }
      return std::nullopt;
    case Temporal::kX:
      if (j + 1 < n) return left[j + 1];
      return std::nullopt;
    case Temporal::kU:
      for (std::size_t k = j; k < n; ++k) {
        if (right[k]) return true;
        if (!left[k]) return false;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

/// Verdicts a gap-free streaming monitor may have emitted after the prefix:
/// the longest run of decided positions starting at 0.
inline std::vector<bool> decided_prefix(Temporal op, const std::vector<bool>& left,
                                        const std::vector<bool>& right) {
  std::vector<bool> out;
  for (std::size_t j = 0; j < left.size(); ++j) {
    auto v = suffix_verdict(op, left, right, j);
    if (!v) break;
    out.push_back(*v);
  }
  return out;
}

/// All argument tuples over a per-argument domain.
inline std::vector<std::vector<Event>> tuples_over(const std::vector<Event>& domain, std::size_t arity) {
  std::vector<std::vector<Event>> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::vector<Event>> next;
    for (const auto& prefix : out) {
      for (const auto& v : domain) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// True when fixing the arguments in `kept` pins the function's value: every
/// substitution of the remaining arguments from `domain` leaves it unchanged.
inline bool sufficient(const LineageFunction& f, const std::vector<Event>& args,
                       const std::set<std::size_t>& kept, const std::vector<Event>& domain) {
  const Event expected = f(args);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!kept.count(i)) free.push_back(i);
  }
  for (const auto& sub : tuples_over(domain, free.size())) {
    auto trial = args;
    for (std::size_t k = 0; k < free.size(); ++k) trial[free[k]] = sub[k];
    if (f(trial) != expected) return false;
  }
  return true;
}

/// Inclusion-minimal sufficient argument sets, by enumeration of subsets.
inline std::vector<std::set<std::size_t>> minimal_sufficient_sets(const LineageFunction& f,
                                                                  const std::vector<Event>& args,
                                                                  const std::vector<Event>& domain) {
  const std::size_t n = args.size();
  std::vector<std::set<std::size_t>> found;
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      std::set<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) s.insert(i);
      }
      bool has_smaller = false;
      for (const auto& m : found) {
        if (std::includes(s.begin(), s.end(), m.begin(), m.end())) has_smaller = true;
      }
      if (!has_smaller && sufficient(f, args, s, domain)) found.push_back(s);
    }
  }
  return found;
}

/// Positions kept by an every-n-th filter, by direct enumeration.
inline std::vector<std::size_t> decimated_positions(std::size_t inputs, std::size_t interval) {
  std::vector<std::size_t> kept;
  std::size_t counter = 0;
  for (std::size_t i = 0; i < inputs; ++i) {
    if (counter == 0) kept.push_back(i);
    counter = (counter + 1) % interval;
  }
  return kept;
}

}  // namespace oracle
