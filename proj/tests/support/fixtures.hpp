#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pa/domain.hpp"
#include "pa/personality.hpp"
#include "pa/rng.hpp"

namespace pa::test {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

inline Date ymd(int y, unsigned m, unsigned d) {
  return Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
}

/// Answers that put every question on the pole the target code holds for its axis.
QuizResponseSet answers_for(const QuizBank& bank, const PersonalityCode& code);
nlohmann::json answers_json(const QuizBank& bank, const PersonalityCode& code);

/// The hand-derived example pair: skills 3/4, personality RETCS against OETCS, every other
/// criterion a perfect fit. Default weights give 86.0.
struct ExamplePair {
  JobListing job;
  CandidateProfile candidate;
  Date as_of;
};
ExamplePair example_pair();

/// Random valid job and candidate over skill ids "s0".."s{catalog-1}", always passing the
/// prefilter. Used by the property tests.
struct RandomPair {
  JobListing job;
  CandidateProfile candidate;
};
RandomPair random_pair(Rng& rng, Date as_of, int catalog = 12);

}  // namespace pa::test
