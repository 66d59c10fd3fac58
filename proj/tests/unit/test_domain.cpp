#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pa/domain.hpp"
#include "pa/domain_json.hpp"
#include "pa/error.hpp"

namespace pa {
namespace {

using test::ymd;

CandidateProfile good_candidate() {
  CandidateProfile c;
  c.candidate_id = CandidateId{"cand-1"};
  c.first_name = "Sam";
  c.last_name = "Lee";
  c.email = "sam@example.com";
  c.date_of_birth = ymd(1990, 6, 15);
  c.location = Location::make("Australia", "NSW", "Sydney");
  c.salary_min = 50'000;
  c.salary_max = 70'000;
  c.skills = {SkillId{"s1"}};
  return c;
}

const std::set<SkillId> kCatalog{SkillId{"s1"}, SkillId{"s2"}};

TEST(Location, MakeNormalizesCaseAndWhitespace) {
  const auto l = Location::make("  Australia ", "NSW", " Sydney");
  EXPECT_EQ(l.country, "australia");
  EXPECT_EQ(l.region, "nsw");
  EXPECT_EQ(l.city, "sydney");
}

TEST(Location, CityNeedsRegionAndCountry) {
  EXPECT_TRUE(Location::make("au", "", "").validate().ok());
  EXPECT_TRUE(Location::make("au", "", "sydney").validate().has("location city without region"));
  EXPECT_TRUE(Location::make("", "", "").validate().has("location country empty"));
}

TEST(ValidateCandidate, WellFormedIsOk) {
  const auto r = validate_candidate(good_candidate(), kCatalog, ymd(2024, 1, 1));
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(ValidateCandidate, InvertedSalaryRange) {
  auto c = good_candidate();
  c.salary_min = 80'000;
  c.salary_max = 60'000;
  EXPECT_TRUE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("salary range inverted"));
  c.salary_open = true;
  EXPECT_FALSE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("salary range inverted"));
}

TEST(ValidateCandidate, UnknownSkill) {
  auto c = good_candidate();
  c.skills.insert(SkillId{"nope"});
  EXPECT_TRUE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("unknown skill"));
}

TEST(ValidateCandidate, EmailNeedsExactlyOneAt) {
  auto c = good_candidate();
  for (const char* bad : {"", "no-at", "a@b@c"}) {
    c.email = bad;
    EXPECT_TRUE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("email malformed")) << bad;
  }
}

TEST(ValidateCandidate, MinimumAgeIsFifteen) {
  auto c = good_candidate();
  c.date_of_birth = ymd(2009, 1, 2);
  EXPECT_TRUE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("underage"));
  c.date_of_birth = ymd(2009, 1, 1);
  EXPECT_FALSE(validate_candidate(c, kCatalog, ymd(2024, 1, 1)).has("underage"));
}

TEST(ValidateCandidate, ReportsEveryViolation) {
  auto c = good_candidate();
  c.first_name = " ";
  c.email = "bad";
  c.skills.insert(SkillId{"zz"});
  const auto r = validate_candidate(c, kCatalog, ymd(2024, 1, 1));
  EXPECT_EQ(r.violations.size(), 3u) << r.summary();
}

TEST(AgeOf, CompletedYears) {
  EXPECT_EQ(age_of(ymd(1990, 6, 15), ymd(2020, 6, 15)), 30);
  EXPECT_EQ(age_of(ymd(1990, 6, 16), ymd(2020, 6, 15)), 29);
  EXPECT_EQ(age_of(ymd(2000, 1, 1), ymd(2000, 1, 1)), 0);
  EXPECT_EQ(age_of(ymd(2000, 2, 29), ymd(2001, 2, 28)), 0);
  EXPECT_EQ(age_of(ymd(2000, 2, 29), ymd(2001, 3, 1)), 1);
}

TEST(AgeOf, FutureBirthdateThrows) {
  try {
    age_of(ymd(2021, 1, 1), ymd(2020, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

TEST(AgeOf, MonotoneInAsOf) {
  const auto birth = ymd(1988, 2, 29);
  int last = 0;
  for (auto d = std::chrono::sys_days{ymd(1988, 2, 29)}; d < std::chrono::sys_days{ymd(1996, 1, 1)};
       d += std::chrono::days{1}) {
    const int a = age_of(birth, Date{d});
    EXPECT_GE(a, last);
    last = a;
  }
  EXPECT_EQ(last, 7);
}

TEST(SalaryCompatible, Examples) {
  auto c = good_candidate();
  c.salary_min = 50'000;
  EXPECT_TRUE(salary_compatible(c, 60'000));
  EXPECT_FALSE(salary_compatible(c, 45'000));
  c.salary_open = true;
  EXPECT_TRUE(salary_compatible(c, 10'000));
}

TEST(SalaryCompatible, MonotoneInOffer) {
  auto c = good_candidate();
  bool seen = false;
  for (Money x = 1'000; x <= 100'000; x += 1'000) {
    const bool ok = salary_compatible(c, x);
    if (seen) EXPECT_TRUE(ok) << x;
    seen = seen || ok;
  }
}

TEST(ValidateJob, Rules) {
  JobListing j;
  j.employer_id = EmployerId{"emp-1"};
  j.title = "cook";
  j.location = Location::make("au", "", "");
  j.offered_salary = 1;
  j.required_skills = {SkillId{"s1"}};
  EXPECT_TRUE(validate_job(j, kCatalog).ok());
  j.ideal_age = 14;
  EXPECT_TRUE(validate_job(j, kCatalog).has("ideal age out of range"));
  j.ideal_age = 100;
  EXPECT_TRUE(validate_job(j, kCatalog).ok());
  j.required_skills.clear();
  j.offered_salary = 0;
  const auto r = validate_job(j, kCatalog);
  EXPECT_TRUE(r.has("required skills empty"));
  EXPECT_TRUE(r.has("offered salary not positive"));
}

TEST(ValidateEmployer, ContactsAndName) {
  EmployerProfile e;
  e.business_name = "";
  e.hr_contacts.push_back({ContactId{"c"}, "", "1", "bad"});
  const auto r = validate_employer(e);
  EXPECT_TRUE(r.has("business name empty"));
  EXPECT_TRUE(r.has("contact name empty"));
  EXPECT_TRUE(r.has("contact email malformed"));
  EXPECT_EQ(business_name_key("  Acme Pty "), business_name_key("acme pty"));
}

TEST(DomainJson, CandidateRoundTrip) {
  auto c = good_candidate();
  c.personality = PersonalityCode::parse("RMLDF");
  c.photo_ref = "p.jpg";
  c.gender = Gender::male;
  c.employment_history.push_back({"cook", "cafe", ymd(2010, 1, 1), ymd(2012, 1, 1)});
  c.employment_history.push_back({"chef", "bistro", ymd(2012, 2, 1), std::nullopt});
  const nlohmann::json j = c;
  EXPECT_EQ(j.at("personality"), "RMLDF");
  EXPECT_EQ(j.get<CandidateProfile>(), c);
}

TEST(DomainJson, JobRoundTripWithOptionalsAbsent) {
  JobListing j;
  j.job_id = JobId{"job-1"};
  j.employer_id = EmployerId{"emp-1"};
  j.title = "t";
  j.location = Location::make("au", "", "");
  j.offered_salary = 5;
  j.required_skills = {SkillId{"s1"}, SkillId{"s2"}};
  const nlohmann::json doc = j;
  EXPECT_TRUE(doc.at("ideal_age").is_null());
  EXPECT_EQ(doc.get<JobListing>(), j);
  j.ideal_gender = Gender::unspecified;
  j.ideal_personality = PersonalityCode::parse("OETCS");
  j.ideal_age = 40;
  j.status = JobStatus::closed;
  EXPECT_EQ(nlohmann::json(j).get<JobListing>(), j);
}

TEST(DomainJson, RejectsBadEnum) {
  nlohmann::json doc = good_candidate();
  doc["employment_type"] = "zero_hours";
  EXPECT_THROW(doc.get<CandidateProfile>(), std::exception);
}

}  // namespace
}  // namespace pa
