#include <benchmark/benchmark.h>

#include "pa/personality.hpp"
#include "pa/rng.hpp"

static void BM_ScoreQuiz(benchmark::State& state) {
  const auto& bank = pa::default_bank();
  pa::Rng rng(7);
  std::vector<pa::QuizResponseSet> sets(256);
  for (auto& s : sets) {
    for (const auto& q : bank.questions) {
      s.answers[q.question_id] = rng.below(2) ? pa::QuizChoice::a : pa::QuizChoice::b;
    }
  }
  std::size_t k = 0;
  for (auto _ : state) {
    auto r = pa::score_quiz(bank, sets[k++ % sets.size()]);
    benchmark::DoNotOptimize(r.code);
  }
}
BENCHMARK(BM_ScoreQuiz);

static void BM_Similarity(benchmark::State& state) {
  std::vector<pa::PersonalityCode> codes;
  for (unsigned bits = 0; bits < 32; ++bits) {
    std::string s;
    for (std::size_t i = 0; i < pa::kAxisCount; ++i) {
      s += (bits >> i & 1) ? pa::kAxes[i].second_pole : pa::kAxes[i].first_pole;
    }
    codes.push_back(pa::PersonalityCode::parse(s));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pa::similarity(codes[k % 32], codes[(k * 7 + 3) % 32]));
    ++k;
  }
}
BENCHMARK(BM_Similarity);
