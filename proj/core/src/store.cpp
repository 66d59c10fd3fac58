#include "pa/store.hpp"

#include "pa/domain.hpp"
#include "pa/error.hpp"

namespace pa {

std::string_view to_string(EntityKind kind) noexcept {
  switch (kind) {
    case EntityKind::candidate: return "Candidate";
    case EntityKind::employer: return "Employer";
    case EntityKind::job: return "Job";
    case EntityKind::skill: return "Skill";
    case EntityKind::personality_result: return "PersonalityResult";
    case EntityKind::personality_question: return "PersonalityQuestion";
    case EntityKind::personality_answer: return "PersonalityAnswer";
    case EntityKind::shortlist: return "Shortlist";
    case EntityKind::message: return "Message";
    case EntityKind::notification: return "Notification";
    case EntityKind::credential: return "Credential";
    case EntityKind::feed: return "Feed";
  }
  return "Unknown";
}

EntityKind parse_entity_kind(std::string_view name) {
  for (auto k : kEntityKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::invalid_argument, "unknown entity kind: " + std::string(name));
}

std::string_view id_field(EntityKind kind) noexcept {
  switch (kind) {
    case EntityKind::candidate: return "candidate_id";
    case EntityKind::employer: return "employer_id";
    case EntityKind::job: return "job_id";
    case EntityKind::skill: return "skill_id";
    case EntityKind::personality_question: return "id";
    case EntityKind::message: return "message_id";
    default: return {};
  }
}

std::optional<std::string> unique_key(EntityKind kind, const nlohmann::json& d) {
  const auto text = [&](const char* key) {
    const auto it = d.find(key);
    return it != d.end() && it->is_string() ? it->get<std::string>() : std::string{};
  };
  switch (kind) {
    case EntityKind::employer: return business_name_key(text("business_name"));
    case EntityKind::skill: return text("name") + '\x1f' + text("category");
    case EntityKind::shortlist: return text("job_id") + '\x1f' + text("candidate_id");
    case EntityKind::personality_result:
    case EntityKind::personality_answer: return text("candidate_id");
    case EntityKind::credential: return text("token_hash");
    case EntityKind::feed: return text("side") + '\x1f' + text("owner");
    default: return std::nullopt;
  }
}

Record Store::get(EntityKind kind, std::string_view id) const {
  if (auto r = find(kind, id)) return std::move(*r);
  throw Error(Errc::not_found, std::string(to_string(kind)) + " not found: " + std::string(id));
}

}  // namespace pa
