#include "pa/domain_json.hpp"

namespace pa {
namespace {

using nlohmann::json;

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) return it->get<T>();
  return std::nullopt;
}

std::string text_or_empty(const json& j, const char* key) {
  return optional_field<std::string>(j, key).value_or("");
}

json optional_json(const auto& opt) {
  if (opt) return json(*opt);
  return nullptr;
}

}  // namespace

void to_json(json& j, const Location& v) {
  j = json{{"country", v.country}, {"region", v.region}, {"city", v.city}};
}
void from_json(const json& j, Location& v) {
  v = Location::make(j.at("country").get<std::string>(), text_or_empty(j, "region"),
                     text_or_empty(j, "city"));
}

void to_json(json& j, const EmploymentRecord& v) {
  j = json{{"title", v.title},
           {"employer", v.employer},
           {"start", format_date(v.start)},
           {"end", v.end ? json(format_date(*v.end)) : json(nullptr)}};
}
void from_json(const json& j, EmploymentRecord& v) {
  v.title = j.at("title").get<std::string>();
  v.employer = j.at("employer").get<std::string>();
  v.start = parse_date(j.at("start").get<std::string>());
  if (auto end = optional_field<std::string>(j, "end")) {
    v.end = parse_date(*end);
  } else {
    v.end.reset();
  }
}

void to_json(json& j, const CandidateProfile& v) {
  j = json{{"candidate_id", v.candidate_id},
           {"first_name", v.first_name},
           {"last_name", v.last_name},
           {"email", v.email},
           {"date_of_birth", format_date(v.date_of_birth)},
           {"gender", to_string(v.gender)},
           {"location", v.location},
           {"salary_min", v.salary_min},
           {"salary_max", v.salary_max},
           {"salary_open", v.salary_open},
           {"employment_type", to_string(v.employment_type)},
           {"personality", optional_json(v.personality)},
           {"skills", v.skills},
           {"photo_ref", optional_json(v.photo_ref)},
           {"employment_history", v.employment_history}};
}
void from_json(const json& j, CandidateProfile& v) {
  v.candidate_id = CandidateId{text_or_empty(j, "candidate_id")};
  v.first_name = j.at("first_name").get<std::string>();
  v.last_name = j.at("last_name").get<std::string>();
  v.email = j.at("email").get<std::string>();
  v.date_of_birth = parse_date(j.at("date_of_birth").get<std::string>());
  v.gender = parse_gender(optional_field<std::string>(j, "gender").value_or("unspecified"));
  v.location = j.at("location").get<Location>();
  v.salary_min = j.at("salary_min").get<Money>();
  v.salary_max = j.at("salary_max").get<Money>();
  v.salary_open = optional_field<bool>(j, "salary_open").value_or(false);
  v.employment_type = parse_employment_type(j.at("employment_type").get<std::string>());
  v.personality = optional_field<PersonalityCode>(j, "personality");
  v.skills = optional_field<std::set<SkillId>>(j, "skills").value_or(std::set<SkillId>{});
  v.photo_ref = optional_field<std::string>(j, "photo_ref");
  v.employment_history = optional_field<std::vector<EmploymentRecord>>(j, "employment_history")
                             .value_or(std::vector<EmploymentRecord>{});
}

void to_json(json& j, const HRContact& v) {
  j = json{{"contact_id", v.contact_id}, {"name", v.name}, {"phone", v.phone}, {"email", v.email}};
}
void from_json(const json& j, HRContact& v) {
  v.contact_id = ContactId{text_or_empty(j, "contact_id")};
  v.name = j.at("name").get<std::string>();
  v.phone = text_or_empty(j, "phone");
  v.email = text_or_empty(j, "email");
}

void to_json(json& j, const EmployerProfile& v) {
  j = json{{"employer_id", v.employer_id},
           {"business_name", v.business_name},
           {"logo_ref", optional_json(v.logo_ref)},
           {"hr_contacts", v.hr_contacts}};
}
void from_json(const json& j, EmployerProfile& v) {
  v.employer_id = EmployerId{text_or_empty(j, "employer_id")};
  v.business_name = j.at("business_name").get<std::string>();
  v.logo_ref = optional_field<std::string>(j, "logo_ref");
  v.hr_contacts =
      optional_field<std::vector<HRContact>>(j, "hr_contacts").value_or(std::vector<HRContact>{});
}

void to_json(json& j, const JobListing& v) {
  j = json{{"job_id", v.job_id},
           {"employer_id", v.employer_id},
           {"title", v.title},
           {"summary", v.summary},
           {"location", v.location},
           {"offered_salary", v.offered_salary},
           {"employment_type", to_string(v.employment_type)},
           {"required_skills", v.required_skills},
           {"ideal_personality", optional_json(v.ideal_personality)},
           {"ideal_age", optional_json(v.ideal_age)},
           {"ideal_gender", v.ideal_gender ? json(to_string(*v.ideal_gender)) : json(nullptr)},
           {"status", to_string(v.status)}};
}
void from_json(const json& j, JobListing& v) {
  v.job_id = JobId{text_or_empty(j, "job_id")};
  v.employer_id = EmployerId{text_or_empty(j, "employer_id")};
  v.title = j.at("title").get<std::string>();
  v.summary = text_or_empty(j, "summary");
  v.location = j.at("location").get<Location>();
  v.offered_salary = j.at("offered_salary").get<Money>();
  v.employment_type = parse_employment_type(j.at("employment_type").get<std::string>());
  v.required_skills = j.at("required_skills").get<std::set<SkillId>>();
  v.ideal_personality = optional_field<PersonalityCode>(j, "ideal_personality");
  v.ideal_age = optional_field<int>(j, "ideal_age");
  if (auto g = optional_field<std::string>(j, "ideal_gender")) {
    v.ideal_gender = parse_gender(*g);
  } else {
    v.ideal_gender.reset();
  }
  v.status = parse_job_status(optional_field<std::string>(j, "status").value_or("open"));
}

void to_json(json& j, const Skill& v) {
  j = json{{"skill_id", v.skill_id}, {"name", v.name}, {"category", v.category}};
}
void from_json(const json& j, Skill& v) {
  v.skill_id = SkillId{text_or_empty(j, "skill_id")};
  v.name = j.at("name").get<std::string>();
  v.category = j.at("category").get<std::string>();
}

}  // namespace pa
