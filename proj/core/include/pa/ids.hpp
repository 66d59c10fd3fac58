#pragma once

#include <compare>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

namespace pa {

/// Opaque string identifier, distinct per entity so ids cannot be mixed up.
template <class Tag>
struct Id {
  std::string value;

  Id() = default;
  explicit Id(std::string v) : value(std::move(v)) {}

  bool empty() const noexcept { return value.empty(); }
  auto operator<=>(const Id&) const = default;
};

using CandidateId = Id<struct CandidateTag>;
using EmployerId = Id<struct EmployerTag>;
using ContactId = Id<struct ContactTag>;
using JobId = Id<struct JobTag>;
using SkillId = Id<struct SkillTag>;
using QuestionId = Id<struct QuestionTag>;
using MessageId = Id<struct MessageTag>;

template <class Tag>
void to_json(nlohmann::json& j, const Id<Tag>& id) {
  j = id.value;
}

template <class Tag>
void from_json(const nlohmann::json& j, Id<Tag>& id) {
  id.value = j.get<std::string>();
}

}  // namespace pa

template <class Tag>
struct std::hash<pa::Id<Tag>> {
  std::size_t operator()(const pa::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};
