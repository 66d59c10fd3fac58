#include "pa/analyst.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pa {
namespace {

using nlohmann::json;

constexpr double kCapTolerance = 1e-12;

std::string weight_key(Criterion c) { return "w_" + std::string(to_string(c)); }

std::size_t matched_skill_count(const JobListing& job, const CandidateProfile& candidate) {
  std::size_t n = 0;
  for (const auto& s : job.required_skills) {
    if (candidate.skills.contains(s)) ++n;
  }
  return n;
}

const std::string& counterpart(const Feed& feed, const MatchResult& r) {
  return feed.side == FeedSide::employer ? r.candidate_id.value : r.job_id.value;
}

}  // namespace

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::skills: return "skills";
    case Criterion::personality: return "personality";
    case Criterion::salary: return "salary";
    case Criterion::location: return "location";
    case Criterion::employment: return "employment";
    case Criterion::age: return "age";
    case Criterion::gender: return "gender";
  }
  return "skills";
}

std::string_view to_string(FeedSide side) noexcept {
  return side == FeedSide::employer ? "employer" : "candidate";
}

ValidationReport validate_weights(const MatchWeights& w) {
  ValidationReport report;
  double sum = 0.0;
  for (auto c : kCriteria) {
    if (!std::isfinite(w[c]) || w[c] < 0.0) report.add("weight negative", weight_key(c));
    sum += w[c];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    report.add("weights do not sum to 1", std::to_string(sum));
  }
  const double mean = (w[Criterion::skills] + w[Criterion::personality] + w[Criterion::salary] +
                       w[Criterion::location] + w[Criterion::employment]) /
                      5.0;
  const double cap = 0.5 * mean;
  if (w[Criterion::age] > cap + kCapTolerance) {
    report.add("demographic cap exceeded", "w_age > " + std::to_string(cap));
  }
  if (w[Criterion::gender] > cap + kCapTolerance) {
    report.add("demographic cap exceeded", "w_gender > " + std::to_string(cap));
  }
  return report;
}

MatchWeights parse_weights(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::invalid_config, "weights must be an object");
  MatchWeights w;
  std::set<std::string> seen;
  for (const auto& [key, value] : doc.items()) {
    const auto it = std::find_if(kCriteria.begin(), kCriteria.end(),
                                 [&](Criterion c) { return weight_key(c) == key; });
    if (it == kCriteria.end()) throw Error(Errc::invalid_config, "unknown weight key: " + key);
    if (!value.is_number()) throw Error(Errc::invalid_config, key + " must be a number");
    w[*it] = value.get<double>();
    seen.insert(key);
  }
  for (auto c : kCriteria) {
    if (!seen.contains(weight_key(c))) {
      throw Error(Errc::invalid_config, "missing weight key: " + weight_key(c));
    }
  }
  if (auto report = validate_weights(w); !report.ok()) {
    throw Error(Errc::invalid_config, "invalid weights: " + report.summary());
  }
  return w;
}

json weights_to_json(const MatchWeights& w) {
  json j = json::object();
  for (auto c : kCriteria) j[weight_key(c)] = w[c];
  return j;
}

bool passes_prefilter(const JobListing& job, const CandidateProfile& candidate) {
  return matched_skill_count(job, candidate) >= 1 &&
         salary_compatible(candidate, job.offered_salary);
}

std::vector<CandidateProfile> prefilter(const JobListing& job,
                                        std::span<const CandidateProfile> candidates) {
  std::vector<CandidateProfile> out;
  for (const auto& c : candidates) {
    if (passes_prefilter(job, c)) out.push_back(c);
  }
  return out;
}

double location_score(const Location& job, const Location& candidate) noexcept {
  if (job.country != candidate.country) return 0.0;
  const bool same_region = !job.region.empty() && job.region == candidate.region;
  if (same_region && !job.city.empty() && job.city == candidate.city) return 1.0;
  if (same_region) return 0.5;
  return 0.25;
}

double salary_score(const CandidateProfile& candidate, Money offered) noexcept {
  if (candidate.salary_open) return 1.0;
  if (candidate.salary_max <= candidate.salary_min) {
    return offered >= candidate.salary_min ? 1.0 : 0.0;
  }
  const double position = static_cast<double>(offered - candidate.salary_min) /
                          static_cast<double>(candidate.salary_max - candidate.salary_min);
  return std::clamp(position, 0.0, 1.0);
}

ScoreBreakdown subscores(const JobListing& job, const CandidateProfile& candidate, Date as_of,
                         double age_tolerance_years) {
  if (!passes_prefilter(job, candidate)) {
    throw Error(Errc::precondition_failed, "candidate " + candidate.candidate_id.value +
                                               " does not pass the prefilter of job " +
                                               job.job_id.value);
  }
  ScoreBreakdown b;
  b[Criterion::skills] = static_cast<double>(matched_skill_count(job, candidate)) /
                         static_cast<double>(job.required_skills.size());
  if (job.ideal_personality && candidate.personality) {
    b[Criterion::personality] = similarity(*candidate.personality, *job.ideal_personality);
  }
  b[Criterion::salary] = salary_score(candidate, job.offered_salary);
  b[Criterion::location] = location_score(job.location, candidate.location);
  b[Criterion::employment] = job.employment_type == candidate.employment_type ? 1.0 : 0.0;
  if (job.ideal_age) {
    const int age = age_of(candidate.date_of_birth, as_of);
    const double delta = std::abs(age - *job.ideal_age);
    b[Criterion::age] = std::max(0.0, 1.0 - delta / age_tolerance_years);
  }
  if (job.ideal_gender && *job.ideal_gender != Gender::unspecified) {
    b[Criterion::gender] = candidate.gender == *job.ideal_gender ? 1.0 : 0.0;
  }
  return b;
}

MatchResult score(const JobListing& job, const CandidateProfile& candidate,
                  const AnalystOptions& options, Date as_of) {
  MatchResult r;
  r.job_id = job.job_id;
  r.candidate_id = candidate.candidate_id;
  r.breakdown = subscores(job, candidate, as_of, options.age_tolerance_years);

  double applicable_weight = 0.0;
  for (auto c : kCriteria) {
    if (r.breakdown.applicable(c)) applicable_weight += options.weights[c];
  }
  if (applicable_weight <= 0.0) return r;  // every applicable criterion carries zero weight

  double sum = 0.0;
  for (auto c : kCriteria) {
    const auto i = static_cast<std::size_t>(c);
    if (!r.breakdown.applicable(c)) continue;
    r.effective_weights[i] = options.weights[c] / applicable_weight;
    sum += r.effective_weights[i] * *r.breakdown[c];
  }
  r.percentage = std::clamp(100.0 * sum, 0.0, 100.0);
  return r;
}

void sort_feed(Feed& feed) {
  std::sort(feed.entries.begin(), feed.entries.end(),
            [&](const MatchResult& a, const MatchResult& b) {
              if (a.percentage != b.percentage) return a.percentage > b.percentage;
              return counterpart(feed, a) < counterpart(feed, b);
            });
}

Feed rank_candidates(const JobListing& job, std::span<const CandidateProfile> candidates,
                     const AnalystOptions& options, Date as_of) {
  if (job.status != JobStatus::open) {
    throw Error(Errc::job_closed, "job " + job.job_id.value + " is closed");
  }
  Feed feed;
  feed.side = FeedSide::employer;
  feed.owner = job.job_id.value;
  feed.generated_at = std::chrono::sys_days{as_of};
  for (const auto& c : candidates) {
    if (passes_prefilter(job, c)) feed.entries.push_back(score(job, c, options, as_of));
  }
  sort_feed(feed);
  return feed;
}

Feed rank_jobs(const CandidateProfile& candidate, std::span<const JobListing> jobs,
               const AnalystOptions& options, Date as_of) {
  Feed feed;
  feed.side = FeedSide::candidate;
  feed.owner = candidate.candidate_id.value;
  feed.generated_at = std::chrono::sys_days{as_of};
  for (const auto& j : jobs) {
    if (j.status == JobStatus::open && passes_prefilter(j, candidate)) {
      feed.entries.push_back(score(j, candidate, options, as_of));
    }
  }
  sort_feed(feed);
  return feed;
}

void to_json(json& j, const ScoreBreakdown& v) {
  j = json::object();
  for (auto c : kCriteria) {
    j[std::string(to_string(c))] = v[c] ? json(*v[c]) : json(nullptr);
  }
}

void from_json(const json& j, ScoreBreakdown& v) {
  for (auto c : kCriteria) {
    const auto& x = j.at(std::string(to_string(c)));
    v[c] = x.is_null() ? std::nullopt : std::optional<double>(x.get<double>());
  }
}

void to_json(json& j, const MatchResult& v) {
  json weights = json::object();
  for (auto c : kCriteria) {
    weights[std::string(to_string(c))] = v.effective_weights[static_cast<std::size_t>(c)];
  }
  j = json{{"job_id", v.job_id},
           {"candidate_id", v.candidate_id},
           {"percentage", v.percentage},
           {"breakdown", v.breakdown},
           {"effective_weights", weights}};
}

void from_json(const json& j, MatchResult& v) {
  v.job_id = JobId{j.at("job_id").get<std::string>()};
  v.candidate_id = CandidateId{j.at("candidate_id").get<std::string>()};
  v.percentage = j.at("percentage").get<double>();
  v.breakdown = j.at("breakdown").get<ScoreBreakdown>();
  for (auto c : kCriteria) {
    v.effective_weights[static_cast<std::size_t>(c)] =
        j.at("effective_weights").at(std::string(to_string(c))).get<double>();
  }
}

void to_json(json& j, const Feed& v) {
  j = json{{"side", to_string(v.side)},
           {"owner", v.owner},
           {"generated_at", format_timestamp(v.generated_at)},
           {"entries", v.entries}};
}

void from_json(const json& j, Feed& v) {
  const auto side = j.at("side").get<std::string>();
  if (side != "employer" && side != "candidate") {
    throw Error(Errc::invalid_argument, "unknown feed side: " + side);
  }
  v.side = side == "employer" ? FeedSide::employer : FeedSide::candidate;
  v.owner = j.at("owner").get<std::string>();
  v.generated_at = parse_timestamp(j.at("generated_at").get<std::string>());
  v.entries = j.at("entries").get<std::vector<MatchResult>>();
}

}  // namespace pa
