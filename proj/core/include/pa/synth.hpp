#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pa/analyst.hpp"
#include "pa/domain.hpp"
#include "pa/snapshot.hpp"

namespace pa::synth {

struct GenConfig {
  std::uint64_t seed = 42;
  std::int64_t candidate_count = 500;
  std::int64_t job_count = 50;
  std::int64_t employer_count = 10;
  std::int64_t skill_count = 60;
  Money salary_floor = 30'000;
  Money salary_ceiling = 150'000;
  std::vector<Location> location_pool = default_locations();
  Date as_of = Date{std::chrono::year{2025}, std::chrono::January, std::chrono::day{1}};
  double closed_job_fraction = 0.1;
  double quiz_taken_fraction = 0.85;

  static std::vector<Location> default_locations();
};

/// Throws Error(invalid_config) listing every problem.
void validate(const GenConfig& config);

/// Deterministic corpus: skills, employers, jobs, candidates, the quiz bank, and quiz
/// answers/results for most candidates. Every record passes the domain validators.
StoreSnapshot generate(const GenConfig& config);

struct Corpus {
  std::vector<CandidateProfile> candidates;
  std::vector<JobListing> jobs;
};

/// Imports the snapshot into a scratch store (digest and integrity checked) and extracts
/// candidates and jobs in id order.
Corpus load_corpus(const StoreSnapshot& snapshot);

struct JobRanking {
  JobId job_id;
  std::string title;
  Feed feed;
};

struct MatchReport {
  Date as_of;
  MatchWeights weights;
  std::size_t candidate_count = 0;
  std::size_t open_job_count = 0;
  std::size_t survivor_count = 0;  // summed over jobs
  std::vector<JobRanking> rankings;  // open jobs in id order
};

MatchReport batch_match(const Corpus& corpus, const AnalystOptions& options, Date as_of);

/// Aligned plain-text tables, one per job, plus a summary block.
std::string render_text(const MatchReport& report);
nlohmann::json report_to_json(const MatchReport& report);
MatchReport report_from_json(const nlohmann::json& doc);

}  // namespace pa::synth
