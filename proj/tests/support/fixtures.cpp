#include "fixtures.hpp"

#include <random>

namespace pa::test {

TempDir::TempDir() {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  for (;;) {
    path_ = base / ("pa-test-" + std::to_string(rd()) + std::to_string(rd()));
    if (std::filesystem::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

QuizResponseSet answers_for(const QuizBank& bank, const PersonalityCode& code) {
  QuizResponseSet r;
  for (const auto& q : bank.questions) {
    r.answers.emplace(q.question_id,
                      q.option_a.pole == code.pole(q.axis) ? QuizChoice::a : QuizChoice::b);
  }
  return r;
}

nlohmann::json answers_json(const QuizBank& bank, const PersonalityCode& code) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, choice] : answers_for(bank, code).answers) {
    out[id.value] = choice == QuizChoice::a ? "a" : "b";
  }
  return out;
}

ExamplePair example_pair() {
  ExamplePair p;
  p.as_of = ymd(2025, 6, 1);
  auto& j = p.job;
  j.job_id = JobId{"job-1"};
  j.employer_id = EmployerId{"emp-1"};
  j.title = "line cook";
  j.location = Location::make("Australia", "NSW", "Sydney");
  j.offered_salary = 60'000;
  j.employment_type = EmploymentType::full_time;
  j.required_skills = {SkillId{"s1"}, SkillId{"s2"}, SkillId{"s3"}, SkillId{"s4"}};
  j.ideal_personality = PersonalityCode::parse("OETCS");
  j.ideal_age = 30;
  j.ideal_gender = Gender::female;

  auto& c = p.candidate;
  c.candidate_id = CandidateId{"cand-1"};
  c.first_name = "Ana";
  c.last_name = "Ruiz";
  c.email = "ana@example.com";
  c.date_of_birth = ymd(1995, 1, 15);  // 30 on 2025-06-01
  c.gender = Gender::female;
  c.location = Location::make("Australia", "NSW", "Sydney");
  c.salary_min = 50'000;
  c.salary_max = 55'000;
  c.employment_type = EmploymentType::full_time;
  c.personality = PersonalityCode::parse("RETCS");
  c.skills = {SkillId{"s1"}, SkillId{"s2"}, SkillId{"s3"}, SkillId{"s9"}};
  return p;
}

RandomPair random_pair(Rng& rng, Date as_of, int catalog) {
  static const std::array<Location, 6> places{
      Location::make("australia", "nsw", "sydney"), Location::make("australia", "nsw", "newcastle"),
      Location::make("australia", "vic", "melbourne"), Location::make("australia", "", ""),
      Location::make("new zealand", "auckland", "auckland"), Location::make("fiji", "", "")};
  static const std::array<EmploymentType, 4> types{EmploymentType::full_time, EmploymentType::part_time,
                                                   EmploymentType::casual, EmploymentType::contract};
  auto skill = [](std::int64_t i) { return SkillId{"s" + std::to_string(i)}; };
  auto code = [&rng] {
    std::array<bool, kAxisCount> first{};
    for (auto& f : first) f = rng.chance(0.5);
    return PersonalityCode::from_poles(first);
  };

  RandomPair p;
  auto& j = p.job;
  j.job_id = JobId{"job-" + std::to_string(rng.below(1000))};
  j.employer_id = EmployerId{"emp-1"};
  j.title = "role";
  const auto want = rng.between(1, 6);
  while (static_cast<std::int64_t>(j.required_skills.size()) < want) j.required_skills.insert(skill(rng.below(catalog)));
  j.location = places[rng.below(places.size())];
  j.offered_salary = rng.between(20'000, 200'000);
  j.employment_type = types[rng.below(types.size())];
  if (rng.chance(0.7)) j.ideal_personality = code();
  if (rng.chance(0.5)) j.ideal_age = static_cast<int>(rng.between(18, 70));
  if (rng.chance(0.5)) j.ideal_gender = rng.chance(0.5) ? Gender::female : Gender::male;

  auto& c = p.candidate;
  c.candidate_id = CandidateId{"cand-" + std::to_string(rng.below(100000))};
  c.first_name = "x";
  c.last_name = "y";
  c.email = "x@example.com";
  c.date_of_birth = Date{as_of.year() - std::chrono::years{rng.between(18, 80)},
                         std::chrono::month{static_cast<unsigned>(rng.between(1, 12))},
                         std::chrono::day{static_cast<unsigned>(rng.between(1, 28))}};
  if (std::chrono::sys_days{c.date_of_birth} > std::chrono::sys_days{as_of}) {
    c.date_of_birth = Date{c.date_of_birth.year() - std::chrono::years{1}, c.date_of_birth.month(),
                           c.date_of_birth.day()};
  }
  c.gender = std::array{Gender::female, Gender::male, Gender::unspecified}[rng.below(3)];
  c.location = places[rng.below(places.size())];
  c.employment_type = types[rng.below(types.size())];
  if (rng.chance(0.8)) c.personality = code();
  // Guarantee one shared skill, then add random extras.
  c.skills.insert(*std::next(j.required_skills.begin(),
                             static_cast<std::ptrdiff_t>(rng.below(j.required_skills.size()))));
  const auto extra = rng.between(0, 6);
  for (std::int64_t i = 0; i < extra; ++i) c.skills.insert(skill(rng.below(catalog)));
  c.salary_open = rng.chance(0.2);
  c.salary_min = rng.between(10'000, j.offered_salary);
  c.salary_max = c.salary_min + rng.between(0, 80'000);
  return p;
}

}  // namespace pa::test
