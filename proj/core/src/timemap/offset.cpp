#include "mementoscope/timemap/offset.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

std::uint64_t count_matches(const TimeMap& tm, Instant first, std::uint64_t n, int step,
                            int offset) {
  std::uint64_t matches = 0;
  const std::chrono::seconds dt(step);
  const std::chrono::seconds x(offset);
  Instant t = first;
  for (std::uint64_t i = 0; i < n; ++i, t += dt) {
    if (closest_index(tm, t) == closest_index(tm, t + x)) ++matches;
  }
  return matches;
}

}  // namespace

OffsetExperimentResult offset_match_rate(const TimeMap& tm, Instant start, Instant end,
                                         int step_seconds, int offset_seconds, unsigned threads) {
  if (!(start < end)) throw Error(ErrorCode::kInvalidArgument, "sample range is empty");
  if (step_seconds < 1) throw Error(ErrorCode::kInvalidArgument, "step must be at least 1 second");
  if (offset_seconds < 0) throw Error(ErrorCode::kInvalidArgument, "offset must be non-negative");
  if (tm.empty()) throw Error(ErrorCode::kEmptyTimemap, "timemap has no mementos");

  const auto span = static_cast<std::uint64_t>((end - start).count());
  const std::uint64_t samples = (span + static_cast<std::uint64_t>(step_seconds) - 1) /
                                static_cast<std::uint64_t>(step_seconds);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t min_chunk = 1 << 16;
  const auto chunks = static_cast<unsigned>(
      std::clamp<std::uint64_t>(samples / min_chunk, 1, threads));

  std::vector<std::uint64_t> partial(chunks, 0);
  const std::uint64_t per = samples / chunks;
  const std::uint64_t extra = samples % chunks;
  {
    std::vector<std::jthread> pool;
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t len = per + (c < extra ? 1 : 0);
      const Instant first = start + std::chrono::seconds(static_cast<std::int64_t>(begin) * step_seconds);
      if (c + 1 == chunks) {
        partial[c] = count_matches(tm, first, len, step_seconds, offset_seconds);
      } else {
        pool.emplace_back([&, c, first, len] {
          partial[c] = count_matches(tm, first, len, step_seconds, offset_seconds);
        });
      }
      begin += len;
    }
  }

  OffsetExperimentResult r;
  r.offset_seconds = offset_seconds;
  r.samples = samples;
  for (auto m : partial) r.matches += m;
  r.match_rate = static_cast<double>(r.matches) / static_cast<double>(r.samples);
  return r;
}

std::vector<OffsetExperimentResult> offset_match_rates(const TimeMap& tm, Instant start, Instant end,
                                                       int step_seconds,
                                                       const std::vector<int>& offsets,
                                                       unsigned threads) {
  std::vector<OffsetExperimentResult> out;
  out.reserve(offsets.size());
  for (int x : offsets) out.push_back(offset_match_rate(tm, start, end, step_seconds, x, threads));
  return out;
}

TimeMap scenario_timemap(const OffsetScenario& s) {
  std::vector<MementoEntry> entries;
  entries.push_back({"M1", MementoDatetime::from_instant(s.m1)});
  entries.push_back({"MC", MementoDatetime::from_instant(s.mc)});
  if (s.m2) entries.push_back({"M2", MementoDatetime::from_instant(*s.m2)});
  return make_timemap("scenario", std::move(entries));
}

OffsetCase classify_offset_case(const OffsetScenario& s) {
  if (!(s.m1 <= s.t1)) throw Error(ErrorCode::kInvalidScenario, "M1 must not follow t1");
  if (!(s.t1 <= s.mc)) throw Error(ErrorCode::kInvalidScenario, "MC must not precede t1");
  if (s.x < 0) throw Error(ErrorCode::kInvalidScenario, "offset must be non-negative");
  if (s.m2 && !(*s.m2 > s.t1)) throw Error(ErrorCode::kInvalidScenario, "M2 must follow t1");

  const TimeMap tm = scenario_timemap(s);
  const auto& hit = closest_memento(tm, s.t1 + std::chrono::seconds(s.x));
  OffsetCase out;
  out.resolved = hit.uri_m == "MC" ? ScenarioMemento::kMc
                 : hit.uri_m == "M2" ? ScenarioMemento::kM2
                                     : ScenarioMemento::kM1;
  out.success = out.resolved == ScenarioMemento::kMc;
  if (!s.m2) {
    out.number = out.success ? 1 : 2;
  } else {
    out.number = out.success ? 3 : 4;
  }
  return out;
}

TimeMap synthetic_timemap(const SyntheticTimemapOptions& opts) {
  if (opts.count == 0) throw Error(ErrorCode::kInvalidArgument, "count must be positive");
  if (!(opts.median_gap_seconds > 0)) throw Error(ErrorCode::kInvalidArgument, "median gap must be positive");

  // The engine's output sequence is fixed by the standard; the distribution
  // classes are not, so the transform is done by hand.
  std::mt19937_64 rng(opts.seed);
  auto uniform = [&] {
    return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  };
  const double mu = std::log(opts.median_gap_seconds);
  const double two_pi = 6.283185307179586;

  std::vector<MementoEntry> entries;
  entries.reserve(opts.count);
  Instant t = opts.start;
  for (std::size_t i = 0; i < opts.count; ++i) {
    if (i > 0) {
      const double z = std::sqrt(-2.0 * std::log(uniform())) * std::cos(two_pi * uniform());
      const double gap = std::exp(mu + opts.gap_sigma * z);
      t += std::chrono::seconds(std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(gap))));
    }
    const std::string ds = to_datestring14(t);
    entries.push_back({"https://web.archive.org/web/" + ds + "/https://example.com/",
                       MementoDatetime::from_instant(t)});
  }
  return TimeMap{"https://example.com/", std::move(entries)};
}

}  // namespace mementoscope
