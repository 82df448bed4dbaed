#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mementoscope/error.hpp"
#include "mementoscope/timemap/timemap.hpp"
#include "test_paths.hpp"

using namespace mementoscope;
using namespace mementoscope::testing;

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

MementoEntry entry(std::string uri, Instant t) { return {std::move(uri), MementoDatetime::from_instant(t)}; }

// Exhaustive scan: smallest distance, first index on ties.
std::size_t linear_closest(const TimeMap& tm, Instant t) {
  std::size_t best = 0;
  auto best_d = std::chrono::abs(tm.entries[0].instant() - t);
  for (std::size_t i = 1; i < tm.entries.size(); ++i) {
    const auto d = std::chrono::abs(tm.entries[i].instant() - t);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

TEST(ParseTimemap, ThreeLinkFixtureSorted) {
  auto tm = parse_timemap(read_file(timemap_fixtures() / "three_links.txt"));
  EXPECT_EQ(tm.original_uri, "http://www.mitre.org/");
  ASSERT_EQ(tm.size(), 2u);
  EXPECT_TRUE(std::is_sorted(tm.entries.begin(), tm.entries.end(),
                             [](const auto& a, const auto& b) { return a.instant() < b.instant(); }));
  EXPECT_EQ(tm.entries[0].uri_m, "https://web.archive.org/web/19970101000000/http://www.mitre.org/");
  EXPECT_EQ(tm.entries[1].uri_m, "https://web.archive.org/web/20100412125057/http://www.mitre.org/");
}

TEST(ParseTimemap, MitreFixtureIgnoresNonMementoLinks) {
  auto tm = parse_timemap(read_file(timemap_fixtures() / "mitre.txt"));
  EXPECT_EQ(tm.size(), 8u);
  EXPECT_EQ(tm.entries.back().datetime.raw, "Mon, 12 Apr 2010 12:50:57 GMT");
}

TEST(ParseTimemap, Malformed) {
  EXPECT_EQ(code_of([] {
              parse_timemap(R"(<https://a/20100101000000/x>; rel="memento"; datetime="Fri, 01 Jan 2010 00:00:00 GMT")");
            }),
            ErrorCode::kMalformedTimemap);
  EXPECT_EQ(code_of([] { parse_timemap(R"(<http://x/>; rel="original")"); }), ErrorCode::kMalformedTimemap);
  EXPECT_EQ(code_of([] { parse_timemap(""); }), ErrorCode::kMalformedTimemap);
  EXPECT_EQ(code_of([] {
              parse_timemap(R"(<http://x/>; rel="original", <https://a/1>; rel="memento"; datetime="garbage")");
            }),
            ErrorCode::kMalformedTimemap);
}

TEST(ParseTimemap, QuotedCommasAndCaseInsensitiveRel) {
  const char* body =
      "<http://x.example/a,b>; rel=\"original\",\n"
      "<https://arc.example/20200101000000/http://x.example/a,b>; REL=\"Last Memento\"; "
      "datetime=\"Wed, 01 Jan 2020 00:00:00 GMT\",\n"
      "<https://arc.example/bad>; rel=\"memento\",\n"
      "<https://arc.example/other>; rel=\"mementos-not\"; datetime=\"Wed, 01 Jan 2020 00:00:00 GMT\"\n";
  auto tm = parse_timemap(body);
  EXPECT_EQ(tm.original_uri, "http://x.example/a,b");
  ASSERT_EQ(tm.size(), 1u);
  EXPECT_EQ(tm.entries[0].uri_m, "https://arc.example/20200101000000/http://x.example/a,b");
}

TEST(ParseTimemap, SerializeRoundTrip) {
  auto tm = parse_timemap(read_file(timemap_fixtures() / "mitre.txt"));
  EXPECT_EQ(parse_timemap(serialize_timemap(tm)), tm);
}

TEST(ClosestMemento, Examples) {
  auto tm = make_timemap("http://x/", {entry("A", make_instant(2021, 1, 1, 10)), entry("B", make_instant(2021, 1, 1, 12))});
  EXPECT_EQ(closest_memento(tm, make_instant(2021, 1, 1, 10, 30)).uri_m, "A");
  EXPECT_EQ(closest_memento(tm, make_instant(2021, 1, 1, 11)).uri_m, "A");
  EXPECT_EQ(closest_memento(tm, make_instant(2021, 1, 1, 11, 0, 1)).uri_m, "B");
  EXPECT_EQ(closest_memento(tm, make_instant(2000, 1, 1)).uri_m, "A");
  EXPECT_EQ(closest_memento(tm, make_instant(2030, 1, 1)).uri_m, "B");
}

TEST(ClosestMemento, EqualDatetimesPickFirst) {
  const Instant t = make_instant(2021, 1, 1);
  auto tm = make_timemap("http://x/", {entry("first", t), entry("second", t), entry("later", t + std::chrono::hours(1))});
  EXPECT_EQ(closest_memento(tm, t).uri_m, "first");
  EXPECT_EQ(closest_memento(tm, t - std::chrono::hours(1)).uri_m, "first");
  EXPECT_EQ(closest_memento(tm, t + std::chrono::minutes(30)).uri_m, "first");
}

TEST(ClosestMemento, EmptyTimemap) {
  TimeMap tm;
  EXPECT_EQ(code_of([&] { closest_memento(tm, Instant{}); }), ErrorCode::kEmptyTimemap);
}

TEST(ClosestMemento, AgreesWithLinearScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    // Coarse grid so equal datetimes and exact midpoints are common.
    std::uniform_int_distribution<std::int64_t> slot(0, 60);
    std::vector<MementoEntry> es;
    for (int i = 0; i < n; ++i) {
      es.push_back(entry("m" + std::to_string(i), Instant{} + std::chrono::seconds(1'600'000'000 + 60 * slot(rng))));
    }
    const TimeMap tm = make_timemap("http://x/", es);
    for (int q = 0; q < 20; ++q) {
      const Instant t = Instant{} + std::chrono::seconds(1'600'000'000 + 30 * std::uniform_int_distribution<std::int64_t>(-4, 124)(rng));
      ASSERT_EQ(closest_index(tm, t), linear_closest(tm, t));
    }
  }
}

TEST(MakeTimemap, StableSort) {
  const Instant t = make_instant(2021, 1, 1);
  auto tm = make_timemap("http://x/", {entry("late", t + std::chrono::seconds(5)), entry("a", t), entry("b", t)});
  EXPECT_EQ(tm.entries[0].uri_m, "a");
  EXPECT_EQ(tm.entries[1].uri_m, "b");
  EXPECT_EQ(tm.entries[2].uri_m, "late");
}
