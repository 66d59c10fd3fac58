#include <map>

#include <benchmark/benchmark.h>

#include "pa/analyst.hpp"
#include "pa/synth.hpp"

namespace {

const pa::synth::Corpus& corpus_for(int candidates) {
  static std::map<int, pa::synth::Corpus> cache;
  auto it = cache.find(candidates);
  if (it == cache.end()) {
    pa::synth::GenConfig cfg;
    cfg.candidate_count = candidates;
    it = cache.emplace(candidates, pa::synth::load_corpus(pa::synth::generate(cfg))).first;
  }
  return it->second;
}

const pa::Date kAsOf = pa::synth::GenConfig{}.as_of;

}  // namespace

static void BM_RankCandidatesOneJob(benchmark::State& state) {
  const auto& c = corpus_for(static_cast<int>(state.range(0)));
  const pa::AnalystOptions opts;
  std::size_t j = 0;
  while (c.jobs[j].status != pa::JobStatus::open) ++j;
  for (auto _ : state) {
    auto feed = pa::rank_candidates(c.jobs[j], c.candidates, opts, kAsOf);
    benchmark::DoNotOptimize(feed.entries.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RankCandidatesOneJob)->Arg(500)->Arg(5000);

static void BM_RankJobsOneCandidate(benchmark::State& state) {
  const auto& c = corpus_for(500);
  const pa::AnalystOptions opts;
  for (auto _ : state) {
    auto feed = pa::rank_jobs(c.candidates.front(), c.jobs, opts, kAsOf);
    benchmark::DoNotOptimize(feed.entries.data());
  }
}
BENCHMARK(BM_RankJobsOneCandidate);

// every open job against the whole corpus, as `analyst match` does
static void BM_BatchMatch(benchmark::State& state) {
  const auto& c = corpus_for(static_cast<int>(state.range(0)));
  const pa::AnalystOptions opts;
  for (auto _ : state) {
    auto report = pa::synth::batch_match(c, opts, kAsOf);
    benchmark::DoNotOptimize(report.survivor_count);
  }
}
BENCHMARK(BM_BatchMatch)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_ScorePair(benchmark::State& state) {
  const auto& c = corpus_for(500);
  const pa::AnalystOptions opts;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < c.jobs.size(); ++j) {
    for (std::size_t i = 0; i < c.candidates.size(); ++i) {
      if (pa::passes_prefilter(c.jobs[j], c.candidates[i])) pairs.emplace_back(j, i);
    }
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [j, i] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(pa::score(c.jobs[j], c.candidates[i], opts, kAsOf).percentage);
  }
}
BENCHMARK(BM_ScorePair);

BENCHMARK_MAIN();
