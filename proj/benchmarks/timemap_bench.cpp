#include <benchmark/benchmark.h>

#include "mementoscope/timemap/offset.hpp"
#include "mementoscope/timemap/timemap.hpp"

using namespace mementoscope;

namespace {

TimeMap bench_timemap(std::size_t n) {
  return synthetic_timemap({.seed = 9, .start = make_instant(2020, 1, 1), .count = n});
}

}  // namespace

static void BM_ClosestMemento(benchmark::State& state) {
  const TimeMap tm = bench_timemap(static_cast<std::size_t>(state.range(0)));
  const auto span = (tm.entries.back().instant() - tm.entries.front().instant()).count();
  std::int64_t k = 0;
  for (auto _ : state) {
    const Instant t = tm.entries.front().instant() + std::chrono::seconds((k += 7919) % span);
    benchmark::DoNotOptimize(closest_index(tm, t));
  }
}
BENCHMARK(BM_ClosestMemento)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_OffsetMatchRate(benchmark::State& state) {
  const TimeMap tm = bench_timemap(500);
  const unsigned threads = static_cast<unsigned>(state.range(0));
  std::uint64_t samples = 0;
  for (auto _ : state) {
    auto r = offset_match_rate(tm, tm.entries.front().instant(), tm.entries.back().instant(), 1, 30, threads);
    samples += r.samples;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_OffsetMatchRate)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_ParseTimemap(benchmark::State& state) {
  const std::string body = serialize_timemap(bench_timemap(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto tm = parse_timemap(body);
    benchmark::DoNotOptimize(tm);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * body.size()));
}
BENCHMARK(BM_ParseTimemap)->Arg(100)->Arg(10000);
