#include <filesystem>

#include <benchmark/benchmark.h>

#include "pa/embedded_store.hpp"
#include "pa/snapshot.hpp"
#include "pa/synth.hpp"

namespace {

nlohmann::json note(std::size_t i) {
  return {{"recipient_party", "candidate"}, {"recipient_id", "cand-00000001"},
          {"kind", "message"},              {"job_id", "job-00000001"},
          {"candidate_id", "cand-00000001"}, {"created_at", "2025-01-01T00:00:00Z"},
          {"read", i % 2 == 0}};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "pa_bench_store";
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

static void BM_PutInMemory(benchmark::State& state) {
  pa::EmbeddedStore store;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(store.put(pa::EntityKind::notification, note(i++)));
}
BENCHMARK(BM_PutInMemory);

static void BM_PutJournaled(benchmark::State& state) {
  const auto dir = scratch_dir();
  {
    auto store = pa::EmbeddedStore::open(dir, {.sync_writes = state.range(0) != 0});
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(store->put(pa::EntityKind::notification, note(i++)));
  }
  std::filesystem::remove_all(dir);
}
BENCHMARK(BM_PutJournaled)->ArgName("fsync")->Arg(0)->Arg(1);

static void BM_CompareAndUpdate(benchmark::State& state) {
  pa::EmbeddedStore store;
  auto rec = store.put(pa::EntityKind::notification, note(0));
  for (auto _ : state) {
    rec = store.compare_and_update(pa::EntityKind::notification, rec.id, rec.version, rec.data);
  }
}
BENCHMARK(BM_CompareAndUpdate);

static void BM_ListByField(benchmark::State& state) {
  pa::EmbeddedStore store;
  for (std::int64_t i = 0; i < state.range(0); ++i) store.put(pa::EntityKind::notification, note(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(store.list_by(pa::EntityKind::notification, "read", true));
  }
}
BENCHMARK(BM_ListByField)->Arg(1000)->Arg(10000);

static void BM_SnapshotRoundTrip(benchmark::State& state) {
  const auto snap = pa::synth::generate({});
  for (auto _ : state) {
    pa::EmbeddedStore store;
    pa::import_snapshot(store, pa::parse_snapshot(pa::serialize(snap)));
    benchmark::DoNotOptimize(pa::serialize(pa::export_snapshot(store)));
  }
}
BENCHMARK(BM_SnapshotRoundTrip)->Unit(benchmark::kMillisecond);
