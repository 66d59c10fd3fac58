#include "pa/personality.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pa {
namespace {

using nlohmann::json;

std::string pole_string(char pole) { return std::string(1, pole); }

char parse_pole(const json& j) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) throw Error(Errc::invalid_argument, "pole must be one letter: " + s);
  return s[0];
}

}  // namespace

const QuizQuestion* QuizBank::find(const QuestionId& id) const noexcept {
  for (const auto& q : questions) {
    if (q.question_id == id) return &q;
  }
  return nullptr;
}

std::string_view to_string(QuizChoice c) noexcept { return c == QuizChoice::a ? "a" : "b"; }

QuizChoice parse_choice(std::string_view text) {
  if (text == "a") return QuizChoice::a;
  if (text == "b") return QuizChoice::b;
  throw Error(Errc::invalid_argument, "answer must be \"a\" or \"b\", got: " + std::string(text));
}

ValidationReport validate_bank(const QuizBank& bank) {
  ValidationReport report;
  if (bank.questions.size() != kQuizSize) {
    report.add("bank size != 25", std::to_string(bank.questions.size()) + " questions");
  }
  std::array<std::size_t, kAxisCount> per_axis{};
  std::set<QuestionId> seen;
  for (const auto& q : bank.questions) {
    if (q.question_id.empty()) report.add("question id empty");
    if (!seen.insert(q.question_id).second) report.add("duplicate question id", q.question_id.value);
    if (q.text.empty()) report.add("question text empty", q.question_id.value);
    ++per_axis[static_cast<std::size_t>(q.axis)];
    const auto& axis = info(q.axis);
    const bool a_ok = q.option_a.pole == axis.first_pole || q.option_a.pole == axis.second_pole;
    const bool b_ok = q.option_b.pole == axis.first_pole || q.option_b.pole == axis.second_pole;
    if (!a_ok || !b_ok || q.option_a.pole == q.option_b.pole) {
      report.add("options not on opposite poles", q.question_id.value);
    }
    if (q.option_a.text.empty() || q.option_b.text.empty()) {
      report.add("option text empty", q.question_id.value);
    }
  }
  for (const auto& axis : kAxes) {
    const auto n = per_axis[static_cast<std::size_t>(axis.axis)];
    if (n != kQuestionsPerAxis) {
      report.add("axis question count != 5", std::string(axis.name) + ": " + std::to_string(n));
    }
  }
  return report;
}

PersonalityResult score_quiz(const QuizBank& bank, const QuizResponseSet& responses,
                             Timestamp taken_at) {
  for (const auto& [id, choice] : responses.answers) {
    if (bank.find(id) == nullptr) throw Error(Errc::unknown_question, "unknown question: " + id.value);
  }
  if (responses.answers.size() != bank.questions.size()) {
    throw Error(Errc::incomplete_response,
                "incomplete responses: " + std::to_string(responses.answers.size()) + " of " +
                    std::to_string(bank.questions.size()) + " answered");
  }

  PersonalityResult result;
  result.candidate_id = responses.candidate_id;
  result.taken_at = taken_at;
  for (const auto& q : bank.questions) {
    const auto it = responses.answers.find(q.question_id);
    if (it == responses.answers.end()) {
      throw Error(Errc::incomplete_response, "incomplete responses: missing " + q.question_id.value);
    }
    const char pole = it->second == QuizChoice::a ? q.option_a.pole : q.option_b.pole;
    auto& tally = result.tallies[static_cast<std::size_t>(q.axis)];
    if (pole == info(q.axis).first_pole) {
      ++tally.first;
    } else {
      ++tally.second;
    }
  }

  std::array<bool, kAxisCount> first{};
  for (std::size_t i = 0; i < kAxisCount; ++i) {
    const auto& t = result.tallies[i];
    if (t.first == t.second) {
      throw Error(Errc::precondition_failed,
                  std::string("tied axis: ") + std::string(kAxes[i].name) + "; bank is unbalanced");
    }
    first[i] = t.first > t.second;
  }
  result.code = PersonalityCode::from_poles(first);
  return result;
}

void to_json(json& j, const QuizQuestion& v) {
  j = json{{"id", v.question_id},
           {"text", v.text},
           {"axis", info(v.axis).name},
           {"option_a", {{"text", v.option_a.text}, {"pole", pole_string(v.option_a.pole)}}},
           {"option_b", {{"text", v.option_b.text}, {"pole", pole_string(v.option_b.pole)}}}};
}

void from_json(const json& j, QuizQuestion& v) {
  static const std::set<std::string> kFields{"id", "text", "axis", "option_a", "option_b"};
  static const std::set<std::string> kOptionFields{"text", "pole"};
  if (!j.is_object()) throw Error(Errc::validation_failed, "question must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!kFields.contains(key)) throw Error(Errc::validation_failed, "unknown question field: " + key);
  }
  for (const char* opt : {"option_a", "option_b"}) {
    const auto& o = j.at(opt);
    if (!o.is_object()) throw Error(Errc::validation_failed, std::string(opt) + " must be an object");
    for (const auto& [key, _] : o.items()) {
      if (!kOptionFields.contains(key)) {
        throw Error(Errc::validation_failed, "unknown option field: " + key);
      }
    }
  }
  v.question_id = QuestionId{j.at("id").get<std::string>()};
  v.text = j.at("text").get<std::string>();
  v.axis = parse_axis(j.at("axis").get<std::string>());
  v.option_a = {j.at("option_a").at("text").get<std::string>(), parse_pole(j.at("option_a").at("pole"))};
  v.option_b = {j.at("option_b").at("text").get<std::string>(), parse_pole(j.at("option_b").at("pole"))};
}

QuizBank parse_bank(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("questions") || !doc.at("questions").is_array()) {
      throw Error(Errc::validation_failed, "quiz bank must be an object with a \"questions\" array");
    }
    QuizBank bank;
    for (const auto& q : doc.at("questions")) bank.questions.push_back(q.get<QuizQuestion>());
    return bank;
  } catch (const json::exception& e) {
    throw Error(Errc::validation_failed, std::string("quiz bank schema: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::validation_failed) throw;
    throw Error(Errc::validation_failed, std::string("quiz bank schema: ") + e.what());
  }
}

QuizBank load_bank_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open quiz bank: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::validation_failed, "quiz bank is not valid JSON: " + std::string(e.what()));
  }
  return parse_bank(doc);
}

json bank_to_json(const QuizBank& bank) { return json{{"questions", bank.questions}}; }

void to_json(json& j, const QuizResponseSet& v) {
  json answers = json::object();
  for (const auto& [id, choice] : v.answers) answers[id.value] = to_string(choice);
  j = json{{"candidate_id", v.candidate_id}, {"answers", answers}};
}

void from_json(const json& j, QuizResponseSet& v) {
  v.candidate_id = CandidateId{j.value("candidate_id", std::string{})};
  v.answers.clear();
  for (const auto& [id, choice] : j.at("answers").items()) {
    v.answers.emplace(QuestionId{id}, parse_choice(choice.get<std::string>()));
  }
}

void to_json(json& j, const PersonalityResult& v) {
  json tallies = json::object();
  for (const auto& axis : kAxes) {
    const auto& t = v.tallies[static_cast<std::size_t>(axis.axis)];
    tallies[std::string(axis.name)] = {{pole_string(axis.first_pole), t.first},
                                       {pole_string(axis.second_pole), t.second}};
  }
  j = json{{"candidate_id", v.candidate_id},
           {"code", v.code.str()},
           {"tallies", tallies},
           {"taken_at", format_timestamp(v.taken_at)}};
}

void from_json(const json& j, PersonalityResult& v) {
  v.candidate_id = CandidateId{j.at("candidate_id").get<std::string>()};
  v.code = PersonalityCode::parse(j.at("code").get<std::string>());
  for (const auto& axis : kAxes) {
    const auto& t = j.at("tallies").at(std::string(axis.name));
    v.tallies[static_cast<std::size_t>(axis.axis)] = {t.at(pole_string(axis.first_pole)).get<int>(),
                                                     t.at(pole_string(axis.second_pole)).get<int>()};
  }
  v.taken_at = parse_timestamp(j.at("taken_at").get<std::string>());
}

}  // namespace pa
