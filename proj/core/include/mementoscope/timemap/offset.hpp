#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mementoscope/core/datetime.hpp"
#include "mementoscope/timemap/timemap.hpp"

namespace mementoscope {

struct OffsetExperimentResult {
  int offset_seconds = 0;
  std::uint64_t samples = 0;
  std::uint64_t matches = 0;
  double match_rate = 0.0;

  friend bool operator==(const OffsetExperimentResult&, const OffsetExperimentResult&) = default;
};

/// For every sample t in [start, end) stepping by `step_seconds`, checks
/// whether closest_memento(t) and closest_memento(t + offset) are the same
/// entry. Samples are split across threads; the result does not depend on
/// the split. Throws Error(kInvalidArgument) for an empty range, a step
/// below 1 or a negative offset, and Error(kEmptyTimemap).
OffsetExperimentResult offset_match_rate(const TimeMap& tm, Instant start, Instant end,
                                         int step_seconds, int offset_seconds,
                                         unsigned threads = 0);

std::vector<OffsetExperimentResult> offset_match_rates(const TimeMap& tm, Instant start, Instant end,
                                                       int step_seconds,
                                                       const std::vector<int>& offsets,
                                                       unsigned threads = 0);

// Timeline of one bookmark request: the latest memento before the request
// (m1), the request (t1), the offset (x), the memento the request creates
// (mc) and possibly a third memento after the request (m2).
struct OffsetScenario {
  Instant m1{};
  Instant t1{};
  int x = 0;
  Instant mc{};
  std::optional<Instant> m2;
};

enum class ScenarioMemento { kM1, kMc, kM2 };

struct OffsetCase {
  int number = 0;  // 1..4
  bool success = false;
  ScenarioMemento resolved = ScenarioMemento::kM1;
};

/// Resolves t1 + x against the timemap {m1, mc, m2?}. Success means the
/// bookmark's datestring leads to MC. Cases: 1 = no m2, success;
/// 2 = no m2, failure; 3 = m2, success; 4 = m2, failure. Throws
/// Error(kInvalidScenario) unless m1 <= t1 <= mc, x >= 0 and m2 > t1.
OffsetCase classify_offset_case(const OffsetScenario& s);

// The scenario's implied timemap, in the order m1, mc, m2 before sorting.
TimeMap scenario_timemap(const OffsetScenario& s);

struct SyntheticTimemapOptions {
  std::uint64_t seed = 1;
  Instant start{};
  std::size_t count = 1000;
  double median_gap_seconds = 900;
  double gap_sigma = 1.0;  // log-normal shape
};

/// Deterministic TimeMap whose inter-memento gaps are log-normal with the
/// given median (whole seconds, at least 1). The same options always give
/// the same map on every platform with IEEE doubles.
TimeMap synthetic_timemap(const SyntheticTimemapOptions& opts);

}  // namespace mementoscope
