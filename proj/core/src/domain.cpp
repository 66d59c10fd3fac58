#include "pa/domain.hpp"

#include <algorithm>
#include <cctype>

namespace pa {
namespace {

std::string normalize(std::string_view text) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  auto first = std::find_if_not(text.begin(), text.end(), is_space);
  auto last = std::find_if_not(text.rbegin(), std::string_view::reverse_iterator(first), is_space)
                  .base();
  std::string out(first, last);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void check_skills(const std::set<SkillId>& skills, const std::set<SkillId>& catalog,
                  ValidationReport& report) {
  for (const auto& s : skills) {
    if (!catalog.contains(s)) report.add("unknown skill", s.value);
  }
}

}  // namespace

std::string_view to_string(EmploymentType t) noexcept {
  switch (t) {
    case EmploymentType::full_time: return "full_time";
    case EmploymentType::part_time: return "part_time";
    case EmploymentType::casual: return "casual";
    case EmploymentType::contract: return "contract";
  }
  return "full_time";
}

std::string_view to_string(Gender g) noexcept {
  switch (g) {
    case Gender::female: return "female";
    case Gender::male: return "male";
    case Gender::unspecified: return "unspecified";
  }
  return "unspecified";
}

std::string_view to_string(JobStatus s) noexcept {
  return s == JobStatus::open ? "open" : "closed";
}

EmploymentType parse_employment_type(std::string_view name) {
  for (auto t : {EmploymentType::full_time, EmploymentType::part_time, EmploymentType::casual,
                 EmploymentType::contract}) {
    if (to_string(t) == name) return t;
  }
  throw Error(Errc::invalid_argument, "unknown employment type: " + std::string(name));
}

Gender parse_gender(std::string_view name) {
  for (auto g : {Gender::female, Gender::male, Gender::unspecified}) {
    if (to_string(g) == name) return g;
  }
  throw Error(Errc::invalid_argument, "unknown gender: " + std::string(name));
}

JobStatus parse_job_status(std::string_view name) {
  if (name == "open") return JobStatus::open;
  if (name == "closed") return JobStatus::closed;
  throw Error(Errc::invalid_argument, "unknown job status: " + std::string(name));
}

Location Location::make(std::string_view country, std::string_view region,
                        std::string_view city) {
  return Location{normalize(country), normalize(region), normalize(city)};
}

ValidationReport Location::validate() const {
  ValidationReport report;
  if (country.empty()) report.add("location country empty");
  if (!city.empty() && region.empty()) report.add("location city without region");
  return report;
}

int age_of(Date date_of_birth, Date as_of) {
  using std::chrono::sys_days;
  if (sys_days{date_of_birth} > sys_days{as_of}) {
    throw Error(Errc::invalid_argument, "date of birth " + format_date(date_of_birth) +
                                            " is after " + format_date(as_of));
  }
  int years = static_cast<int>(as_of.year()) - static_cast<int>(date_of_birth.year());
  const auto birthday_month = date_of_birth.month();
  const auto birthday_day = date_of_birth.day();
  if (as_of.month() < birthday_month ||
      (as_of.month() == birthday_month && as_of.day() < birthday_day)) {
    --years;
  }
  return years;
}

bool salary_compatible(const CandidateProfile& candidate, Money offered) {
  return candidate.salary_open || offered >= candidate.salary_min;
}

ValidationReport validate_candidate(const CandidateProfile& p, const std::set<SkillId>& catalog,
                                    Date as_of) {
  ValidationReport report;
  if (blank(p.first_name)) report.add("first name empty");
  if (blank(p.last_name)) report.add("last name empty");
  if (p.email.empty() || std::count(p.email.begin(), p.email.end(), '@') != 1) {
    report.add("email malformed", p.email);
  }
  if (p.salary_min < 0) report.add("salary minimum negative");
  if (!p.salary_open && p.salary_min > p.salary_max) {
    report.add("salary range inverted",
               std::to_string(p.salary_min) + " > " + std::to_string(p.salary_max));
  }
  if (!p.date_of_birth.ok()) {
    report.add("date of birth invalid");
  } else if (std::chrono::sys_days{p.date_of_birth} > std::chrono::sys_days{as_of}) {
    report.add("date of birth in future", format_date(p.date_of_birth));
  } else if (age_of(p.date_of_birth, as_of) < kMinimumAge) {
    report.add("underage", "minimum age " + std::to_string(kMinimumAge));
  }
  report.merge(p.location.validate());
  check_skills(p.skills, catalog, report);
  for (const auto& h : p.employment_history) {
    if (blank(h.title) || blank(h.employer)) report.add("employment history row incomplete");
    if (h.end && std::chrono::sys_days{*h.end} < std::chrono::sys_days{h.start}) {
      report.add("employment history row ends before start", h.title);
    }
  }
  return report;
}

ValidationReport validate_contact(const HRContact& c) {
  ValidationReport report;
  if (blank(c.name)) report.add("contact name empty");
  if (!c.email.empty() && std::count(c.email.begin(), c.email.end(), '@') != 1) {
    report.add("contact email malformed", c.email);
  }
  return report;
}

ValidationReport validate_employer(const EmployerProfile& e) {
  ValidationReport report;
  if (blank(e.business_name)) report.add("business name empty");
  for (const auto& c : e.hr_contacts) report.merge(validate_contact(c));
  return report;
}

ValidationReport validate_job(const JobListing& j, const std::set<SkillId>& catalog) {
  ValidationReport report;
  if (j.employer_id.empty()) report.add("employer missing");
  if (blank(j.title)) report.add("title empty");
  if (j.offered_salary <= 0) report.add("offered salary not positive");
  if (j.required_skills.empty()) report.add("required skills empty");
  if (j.ideal_age && (*j.ideal_age < kMinimumAge || *j.ideal_age > kMaximumIdealAge)) {
    report.add("ideal age out of range", std::to_string(*j.ideal_age));
  }
  report.merge(j.location.validate());
  check_skills(j.required_skills, catalog, report);
  return report;
}

ValidationReport validate_skill(const Skill& s) {
  ValidationReport report;
  if (blank(s.name)) report.add("skill name empty");
  if (blank(s.category)) report.add("skill category empty");
  return report;
}

std::string business_name_key(std::string_view name) { return normalize(name); }

}  // namespace pa
