#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pa/domain.hpp"

namespace pa {

/// Scoring criteria in their canonical order; all weighted sums run in this order.
enum class Criterion : std::size_t { skills, personality, salary, location, employment, age, gender };

inline constexpr std::size_t kCriterionCount = 7;
inline constexpr std::array<Criterion, kCriterionCount> kCriteria{
    Criterion::skills,     Criterion::personality, Criterion::salary, Criterion::location,
    Criterion::employment, Criterion::age,         Criterion::gender};

std::string_view to_string(Criterion c) noexcept;

struct MatchWeights {
  std::array<double, kCriterionCount> values{0.40, 0.20, 0.15, 0.10, 0.05, 0.05, 0.05};

  double operator[](Criterion c) const noexcept { return values[static_cast<std::size_t>(c)]; }
  double& operator[](Criterion c) noexcept { return values[static_cast<std::size_t>(c)]; }
  bool operator==(const MatchWeights&) const = default;
};

inline constexpr double kWeightSumTolerance = 1e-9;

/// Non-negative, summing to 1, and the demographic cap: neither the age nor the gender
/// weight may exceed half the mean of the five non-demographic weights.
ValidationReport validate_weights(const MatchWeights& weights);

/// Keys are the seven weight names, "w_skills" ... "w_gender"; all seven are required.
/// Throws Error(invalid_config) for unknown keys, missing keys or a failing validation.
MatchWeights parse_weights(const nlohmann::json& doc);
nlohmann::json weights_to_json(const MatchWeights& weights);

struct AnalystOptions {
  MatchWeights weights;
  /// Age subscore falls linearly to zero at this distance from the ideal age.
  double age_tolerance_years = 10.0;
};

/// Per-criterion fit values; an empty optional marks an inapplicable criterion.
struct ScoreBreakdown {
  std::array<std::optional<double>, kCriterionCount> subscores{};

  bool applicable(Criterion c) const noexcept {
    return subscores[static_cast<std::size_t>(c)].has_value();
  }
  const std::optional<double>& operator[](Criterion c) const noexcept {
    return subscores[static_cast<std::size_t>(c)];
  }
  std::optional<double>& operator[](Criterion c) noexcept {
    return subscores[static_cast<std::size_t>(c)];
  }
  bool operator==(const ScoreBreakdown&) const = default;
};

struct MatchResult {
  JobId job_id;
  CandidateId candidate_id;
  double percentage = 0.0;
  ScoreBreakdown breakdown;
  /// Weights after renormalization over the applicable criteria; zero when inapplicable.
  std::array<double, kCriterionCount> effective_weights{};

  bool operator==(const MatchResult&) const = default;
};

enum class FeedSide { employer, candidate };

/// Ranked counterparts: descending percentage, ties by ascending counterpart id.
struct Feed {
  FeedSide side = FeedSide::employer;
  std::string owner;  // job id (employer side) or candidate id (candidate side)
  std::vector<MatchResult> entries;
  Timestamp generated_at{};

  bool operator==(const Feed&) const = default;
};

bool passes_prefilter(const JobListing& job, const CandidateProfile& candidate);

/// Candidates sharing at least one required skill and salary-compatible with the offer,
/// in input order.
std::vector<CandidateProfile> prefilter(const JobListing& job,
                                        std::span<const CandidateProfile> candidates);

double location_score(const Location& job, const Location& candidate) noexcept;
double salary_score(const CandidateProfile& candidate, Money offered) noexcept;

/// Throws Error(precondition_failed) when the candidate fails the job's prefilter.
ScoreBreakdown subscores(const JobListing& job, const CandidateProfile& candidate, Date as_of,
                         double age_tolerance_years = 10.0);

/// Renormalizes the weights over applicable criteria and returns the 0-100 percentage.
MatchResult score(const JobListing& job, const CandidateProfile& candidate,
                  const AnalystOptions& options, Date as_of);

/// Employer-side feed. Throws Error(job_closed) for a closed job.
Feed rank_candidates(const JobListing& job, std::span<const CandidateProfile> candidates,
                     const AnalystOptions& options, Date as_of);

/// Candidate-side feed over the open jobs whose prefilter the candidate survives.
Feed rank_jobs(const CandidateProfile& candidate, std::span<const JobListing> jobs,
               const AnalystOptions& options, Date as_of);

/// Orders entries by descending percentage, then ascending counterpart id.
void sort_feed(Feed& feed);

std::string_view to_string(FeedSide side) noexcept;

void to_json(nlohmann::json& j, const ScoreBreakdown& v);
void from_json(const nlohmann::json& j, ScoreBreakdown& v);
void to_json(nlohmann::json& j, const MatchResult& v);
void from_json(const nlohmann::json& j, MatchResult& v);
void to_json(nlohmann::json& j, const Feed& v);
void from_json(const nlohmann::json& j, Feed& v);

}  // namespace pa
