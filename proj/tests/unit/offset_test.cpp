#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mementoscope/error.hpp"
#include "mementoscope/timemap/offset.hpp"

using namespace mementoscope;
using std::chrono::seconds;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kInvalidArgument;
}

// Double loop over samples with its own nearest search.
OffsetExperimentResult brute_force(const TimeMap& tm, Instant start, Instant end, int step, int offset) {
  auto nearest = [&](Instant t) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < tm.entries.size(); ++i) {
      if (std::chrono::abs(tm.entries[i].instant() - t) < std::chrono::abs(tm.entries[best].instant() - t)) best = i;
    }
    return best;
  };
  OffsetExperimentResult r;
  r.offset_seconds = offset;
  for (Instant t = start; t < end; t += seconds(step)) {
    ++r.samples;
    if (nearest(t) == nearest(t + seconds(offset))) ++r.matches;
  }
  r.match_rate = static_cast<double>(r.matches) / static_cast<double>(r.samples);
  return r;
}

const Instant kT1 = make_instant(2021, 3, 4, 15, 0, 0);

}  // namespace

TEST(OffsetMatchRate, ZeroOffsetIsExactlyOne) {
  auto tm = synthetic_timemap({.seed = 3, .start = make_instant(2021, 1, 1), .count = 200});
  auto r = offset_match_rate(tm, tm.entries.front().instant(), tm.entries.back().instant(), 1, 0);
  EXPECT_EQ(r.match_rate, 1.0);
  EXPECT_EQ(r.matches, r.samples);
}

TEST(OffsetMatchRate, SingleMementoAlwaysMatches) {
  TimeMap tm{"http://x/", {{"m", MementoDatetime::from_instant(kT1)}}};
  for (int offset : {0, 30, 600, 86400}) {
    EXPECT_EQ(offset_match_rate(tm, kT1 - seconds(5000), kT1 + seconds(5000), 7, offset).match_rate, 1.0);
  }
}

TEST(OffsetMatchRate, MatchesBruteForce) {
  auto tm = synthetic_timemap({.seed = 17, .start = make_instant(2021, 1, 1), .count = 60, .median_gap_seconds = 300});
  const Instant start = tm.entries.front().instant() - seconds(100);
  const Instant end = tm.entries.back().instant() + seconds(100);
  for (int offset : {0, 1, 30, 60, 120, 1000}) {
    for (int step : {1, 7, 60}) {
      EXPECT_EQ(offset_match_rate(tm, start, end, step, offset), brute_force(tm, start, end, step, offset))
          << "offset " << offset << " step " << step;
    }
  }
}

TEST(OffsetMatchRate, ThreadCountDoesNotMatter) {
  auto tm = synthetic_timemap({.seed = 8, .start = make_instant(2021, 1, 1), .count = 2000});
  const Instant start = tm.entries.front().instant();
  const Instant end = tm.entries.back().instant();
  const auto one = offset_match_rate(tm, start, end, 1, 60, 1);
  EXPECT_EQ(offset_match_rate(tm, start, end, 1, 60, 4), one);
  EXPECT_EQ(offset_match_rate(tm, start, end, 1, 60, 0), one);
  EXPECT_GT(one.samples, 65536u * 4);
}

TEST(OffsetMatchRate, NonIncreasingInOffset) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto tm = synthetic_timemap({.seed = seed, .start = make_instant(2021, 1, 1), .count = 500});
    auto rates = offset_match_rates(tm, tm.entries.front().instant(), tm.entries.back().instant(), 1,
                                    {0, 1, 10, 30, 60, 120, 300, 900});
    for (std::size_t i = 1; i < rates.size(); ++i) {
      EXPECT_LE(rates[i].match_rate, rates[i - 1].match_rate) << "seed " << seed << " offset " << rates[i].offset_seconds;
    }
  }
}

TEST(OffsetMatchRate, InvalidArguments) {
  auto tm = synthetic_timemap({.count = 10});
  const Instant s = tm.entries.front().instant();
  EXPECT_EQ(code_of([&] { offset_match_rate(tm, s, s, 1, 30); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { offset_match_rate(tm, s, s + seconds(10), 0, 30); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { offset_match_rate(tm, s, s + seconds(10), 1, -1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { offset_match_rate(TimeMap{}, s, s + seconds(10), 1, 1); }), ErrorCode::kEmptyTimemap);
}

TEST(OffsetMatchRate, PartialLastStep) {
  TimeMap tm{"http://x/", {{"m", MementoDatetime::from_instant(kT1)}}};
  EXPECT_EQ(offset_match_rate(tm, kT1, kT1 + seconds(10), 3, 0).samples, 4u);  // 0, 3, 6, 9
  EXPECT_EQ(offset_match_rate(tm, kT1, kT1 + seconds(9), 3, 0).samples, 3u);
}

TEST(SyntheticTimemap, DeterministicAndShaped) {
  SyntheticTimemapOptions o{.seed = 42, .start = make_instant(2021, 1, 1), .count = 5001};
  const auto a = synthetic_timemap(o);
  EXPECT_EQ(a, synthetic_timemap(o));
  ASSERT_EQ(a.size(), 5001u);
  EXPECT_EQ(a.entries.front().instant(), o.start);
  std::vector<std::int64_t> gaps;
  for (std::size_t i = 1; i < a.size(); ++i) {
    gaps.push_back((a.entries[i].instant() - a.entries[i - 1].instant()).count());
    ASSERT_GE(gaps.back(), 1);
  }
  std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
  const double median = static_cast<double>(gaps[gaps.size() / 2]);
  EXPECT_NEAR(median, 900.0, 900.0 * 0.1);
  o.seed = 43;
  EXPECT_NE(a, synthetic_timemap(o));
}

TEST(OffsetCases, SuccessWithoutM2) {
  auto c = classify_offset_case({.m1 = kT1 - seconds(3600), .t1 = kT1, .x = 30, .mc = kT1 + seconds(40)});
  EXPECT_EQ(c.number, 1);
  EXPECT_TRUE(c.success);
  EXPECT_EQ(c.resolved, ScenarioMemento::kMc);
}

TEST(OffsetCases, FailureWithoutM2) {
  auto c = classify_offset_case({.m1 = kT1 - seconds(10), .t1 = kT1, .x = 30, .mc = kT1 + seconds(600)});
  EXPECT_EQ(c.number, 2);
  EXPECT_FALSE(c.success);
  EXPECT_EQ(c.resolved, ScenarioMemento::kM1);
}

TEST(OffsetCases, SuccessDespiteM2) {
  auto c = classify_offset_case(
      {.m1 = kT1 - seconds(3600), .t1 = kT1, .x = 30, .mc = kT1 + seconds(35), .m2 = kT1 + seconds(600)});
  EXPECT_EQ(c.number, 3);
  EXPECT_TRUE(c.success);
}

TEST(OffsetCases, M2TooClose) {
  auto c = classify_offset_case(
      {.m1 = kT1 - seconds(3600), .t1 = kT1, .x = 30, .mc = kT1 + seconds(400), .m2 = kT1 + seconds(31)});
  EXPECT_EQ(c.number, 4);
  EXPECT_FALSE(c.success);
  EXPECT_EQ(c.resolved, ScenarioMemento::kM2);
}

TEST(OffsetCases, ExactTieFavoursEarlier) {
  // t1+x is 30 s from both M1 and MC.
  auto c = classify_offset_case({.m1 = kT1, .t1 = kT1, .x = 30, .mc = kT1 + seconds(60)});
  EXPECT_EQ(c.resolved, ScenarioMemento::kM1);
  EXPECT_EQ(c.number, 2);
}

TEST(OffsetCases, InvalidScenarios) {
  auto bad = [](OffsetScenario s) { return code_of([&] { classify_offset_case(s); }); };
  EXPECT_EQ(bad({.m1 = kT1 + seconds(1), .t1 = kT1, .x = 30, .mc = kT1 + seconds(40)}), ErrorCode::kInvalidScenario);
  EXPECT_EQ(bad({.m1 = kT1, .t1 = kT1, .x = 30, .mc = kT1 - seconds(1)}), ErrorCode::kInvalidScenario);
  EXPECT_EQ(bad({.m1 = kT1, .t1 = kT1, .x = -1, .mc = kT1 + seconds(1)}), ErrorCode::kInvalidScenario);
  EXPECT_EQ(bad({.m1 = kT1, .t1 = kT1, .x = 30, .mc = kT1 + seconds(40), .m2 = kT1}), ErrorCode::kInvalidScenario);
}

// Success must coincide with the nearest entry of the implied timemap being MC.
TEST(OffsetCases, DefinitionalCrossCheck) {
  std::mt19937_64 rng(2021);
  std::uniform_int_distribution<int> d(0, 1200);
  int by_case[5] = {};
  for (int i = 0; i < 20000; ++i) {
    OffsetScenario s;
    s.t1 = kT1;
    s.m1 = kT1 - seconds(d(rng));
    s.mc = kT1 + seconds(d(rng));
    s.x = d(rng) % 180;
    if (rng() % 2) s.m2 = kT1 + seconds(1 + d(rng));
    const auto c = classify_offset_case(s);
    const TimeMap tm = scenario_timemap(s);
    const auto& picked = closest_memento(tm, s.t1 + seconds(s.x));
    ASSERT_EQ(c.success, picked.uri_m == "MC");
    ASSERT_EQ(c.number, (s.m2 ? 3 : 1) + (c.success ? 0 : 1));
    ++by_case[c.number];
  }
  for (int k = 1; k <= 4; ++k) EXPECT_GT(by_case[k], 0) << "case " << k;
}
