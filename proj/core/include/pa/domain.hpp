#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pa/date.hpp"
#include "pa/error.hpp"
#include "pa/ids.hpp"
#include "pa/personality_code.hpp"

namespace pa {

/// Whole currency units per year.
using Money = std::int64_t;

enum class EmploymentType { full_time, part_time, casual, contract };
enum class Gender { female, male, unspecified };

std::string_view to_string(EmploymentType t) noexcept;
std::string_view to_string(Gender g) noexcept;
/// Throw Error(invalid_argument) on an unknown name.
EmploymentType parse_employment_type(std::string_view name);
Gender parse_gender(std::string_view name);

/// (country, region, city), each lowercased and trimmed on construction.
struct Location {
  std::string country;
  std::string region;
  std::string city;

  static Location make(std::string_view country, std::string_view region = {},
                       std::string_view city = {});

  ValidationReport validate() const;
  bool operator==(const Location&) const = default;
};

struct EmploymentRecord {
  std::string title;
  std::string employer;
  Date start;
  std::optional<Date> end;

  bool operator==(const EmploymentRecord&) const = default;
};

struct CandidateProfile {
  CandidateId candidate_id;
  std::string first_name;
  std::string last_name;
  std::string email;
  Date date_of_birth;
  Gender gender = Gender::unspecified;
  Location location;
  Money salary_min = 0;
  Money salary_max = 0;
  bool salary_open = false;  // "can be negotiated"
  EmploymentType employment_type = EmploymentType::full_time;
  std::optional<PersonalityCode> personality;
  std::set<SkillId> skills;
  std::optional<std::string> photo_ref;
  std::vector<EmploymentRecord> employment_history;

  bool operator==(const CandidateProfile&) const = default;
};

struct HRContact {
  ContactId contact_id;
  std::string name;
  std::string phone;
  std::string email;

  bool operator==(const HRContact&) const = default;
};

struct EmployerProfile {
  EmployerId employer_id;
  std::string business_name;
  std::optional<std::string> logo_ref;
  std::vector<HRContact> hr_contacts;

  bool operator==(const EmployerProfile&) const = default;
};

enum class JobStatus { open, closed };
std::string_view to_string(JobStatus s) noexcept;
JobStatus parse_job_status(std::string_view name);

struct JobListing {
  JobId job_id;
  EmployerId employer_id;
  std::string title;
  std::string summary;
  Location location;
  Money offered_salary = 0;
  EmploymentType employment_type = EmploymentType::full_time;
  std::set<SkillId> required_skills;
  std::optional<PersonalityCode> ideal_personality;
  std::optional<int> ideal_age;
  std::optional<Gender> ideal_gender;
  JobStatus status = JobStatus::open;

  bool operator==(const JobListing&) const = default;
};

struct Skill {
  SkillId skill_id;
  std::string name;
  std::string category;

  bool operator==(const Skill&) const = default;
};

inline constexpr int kMinimumAge = 15;
inline constexpr int kMaximumIdealAge = 100;

/// Completed whole years; throws Error(invalid_argument) if born after `as_of`.
int age_of(Date date_of_birth, Date as_of);

/// True iff the candidate's salary is open to negotiation or `offered` reaches the minimum.
bool salary_compatible(const CandidateProfile& candidate, Money offered);

ValidationReport validate_candidate(const CandidateProfile& profile,
                                    const std::set<SkillId>& catalog, Date as_of);
ValidationReport validate_employer(const EmployerProfile& profile);
ValidationReport validate_contact(const HRContact& contact);
/// Checks the listing's own invariants; employer resolution is the caller's job.
ValidationReport validate_job(const JobListing& job, const std::set<SkillId>& catalog);
ValidationReport validate_skill(const Skill& skill);

/// Case-insensitive key used for employer-name uniqueness.
std::string business_name_key(std::string_view name);

}  // namespace pa
