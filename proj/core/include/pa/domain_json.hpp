#pragma once

// JSON forms of the domain entities. These are the wire and storage forms;
// field names are documented in docs/api.md.

#include <nlohmann/json.hpp>

#include "pa/domain.hpp"

namespace pa {

void to_json(nlohmann::json& j, const Location& v);
void from_json(const nlohmann::json& j, Location& v);
void to_json(nlohmann::json& j, const EmploymentRecord& v);
void from_json(const nlohmann::json& j, EmploymentRecord& v);
void to_json(nlohmann::json& j, const CandidateProfile& v);
void from_json(const nlohmann::json& j, CandidateProfile& v);
void to_json(nlohmann::json& j, const HRContact& v);
void from_json(const nlohmann::json& j, HRContact& v);
void to_json(nlohmann::json& j, const EmployerProfile& v);
void from_json(const nlohmann::json& j, EmployerProfile& v);
void to_json(nlohmann::json& j, const JobListing& v);
void from_json(const nlohmann::json& j, JobListing& v);
void to_json(nlohmann::json& j, const Skill& v);
void from_json(const nlohmann::json& j, Skill& v);

}  // namespace pa
