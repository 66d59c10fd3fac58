#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pa/date.hpp"
#include "pa/error.hpp"
#include "pa/ids.hpp"
#include "pa/personality_code.hpp"

namespace pa {

inline constexpr std::size_t kQuizSize = 25;
inline constexpr std::size_t kQuestionsPerAxis = kQuizSize / kAxisCount;

struct QuizOption {
  std::string text;
  char pole = '?';

  bool operator==(const QuizOption&) const = default;
};

/// One forced-choice question: the two options sit on opposite poles of `axis`.
struct QuizQuestion {
  QuestionId question_id;
  std::string text;
  Axis axis = Axis::sociability;
  QuizOption option_a;
  QuizOption option_b;

  bool operator==(const QuizQuestion&) const = default;
};

struct QuizBank {
  std::vector<QuizQuestion> questions;

  const QuizQuestion* find(const QuestionId& id) const noexcept;
};

enum class QuizChoice { a, b };

struct QuizResponseSet {
  CandidateId candidate_id;
  std::map<QuestionId, QuizChoice> answers;

  bool operator==(const QuizResponseSet&) const = default;
};

struct AxisTally {
  int first = 0;   // answers landing on the axis's first pole
  int second = 0;

  bool operator==(const AxisTally&) const = default;
};

struct PersonalityResult {
  CandidateId candidate_id;
  PersonalityCode code = PersonalityCode::parse("OETCS");
  std::array<AxisTally, kAxisCount> tallies{};
  Timestamp taken_at{};

  bool operator==(const PersonalityResult&) const = default;
};

/// Size, per-axis balance, unique ids and option/pole well-formedness.
ValidationReport validate_bank(const QuizBank& bank);

/// Majority pole per axis. Throws Error(unknown_question) for an id outside the bank and
/// Error(incomplete_response) unless every bank question is answered exactly once.
PersonalityResult score_quiz(const QuizBank& bank, const QuizResponseSet& responses,
                             Timestamp taken_at = {});

/// Parses the quiz bank document (see docs/quiz_bank.md). Throws Error(validation_failed)
/// on schema violations; does not check the 25/5-per-axis balance (see validate_bank).
QuizBank parse_bank(const nlohmann::json& doc);
QuizBank load_bank_file(const std::string& path);
nlohmann::json bank_to_json(const QuizBank& bank);

/// The shipped 25-question bank.
const QuizBank& default_bank();

std::string_view to_string(QuizChoice c) noexcept;
QuizChoice parse_choice(std::string_view text);

void to_json(nlohmann::json& j, const QuizQuestion& v);
void from_json(const nlohmann::json& j, QuizQuestion& v);
void to_json(nlohmann::json& j, const QuizResponseSet& v);
void from_json(const nlohmann::json& j, QuizResponseSet& v);
void to_json(nlohmann::json& j, const PersonalityResult& v);
void from_json(const nlohmann::json& j, PersonalityResult& v);

}  // namespace pa
