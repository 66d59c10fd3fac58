#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pa {

/// Tables. The first eight are the platform's core tables; the rest hold messages,
/// notifications, hashed bearer credentials and materialized feeds.
enum class EntityKind : std::size_t {
  candidate,
  employer,
  job,
  skill,
  personality_result,
  personality_question,
  personality_answer,
  shortlist,
  message,
  notification,
  credential,
  feed,
};

inline constexpr std::size_t kEntityKindCount = 12;
inline constexpr std::array<EntityKind, kEntityKindCount> kEntityKinds{
    EntityKind::candidate,          EntityKind::employer,
    EntityKind::job,                EntityKind::skill,
    EntityKind::personality_result, EntityKind::personality_question,
    EntityKind::personality_answer, EntityKind::shortlist,
    EntityKind::message,            EntityKind::notification,
    EntityKind::credential,         EntityKind::feed};

std::string_view to_string(EntityKind kind) noexcept;
EntityKind parse_entity_kind(std::string_view name);

/// Body field that mirrors the record id ("candidate_id", ...), or empty.
std::string_view id_field(EntityKind kind) noexcept;

/// Uniqueness key of a record body, for kinds that declare one:
/// employer business name (case-insensitive), skill (name, category), one shortlist,
/// personality result and answer set per pair/candidate, one credential per token hash,
/// one feed per owner.
std::optional<std::string> unique_key(EntityKind kind, const nlohmann::json& data);

struct Record {
  EntityKind kind = EntityKind::candidate;
  std::string id;
  std::uint64_t version = 1;
  nlohmann::json data;

  bool operator==(const Record&) const = default;
};

/// Storage interface. Implementations hold no business rules beyond uniqueness keys and
/// optimistic versioning; every mutation is atomic per record.
class Store {
 public:
  virtual ~Store() = default;

  /// Inserts a new record at version 1. An empty `id` asks the store to assign one.
  /// Throws Error(duplicate_key) on an id or unique-key clash.
  virtual Record put(EntityKind kind, nlohmann::json data, std::string id = {}) = 0;

  virtual std::optional<Record> find(EntityKind kind, std::string_view id) const = 0;

  /// Throws Error(not_found).
  Record get(EntityKind kind, std::string_view id) const;

  virtual std::optional<Record> find_unique(EntityKind kind, std::string_view key) const = 0;

  /// Throws Error(not_found).
  virtual void remove(EntityKind kind, std::string_view id) = 0;

  /// All records of a kind in ascending id order.
  virtual std::vector<Record> list(EntityKind kind) const = 0;

  /// Equality filter on a top-level body field; array fields match by membership.
  virtual std::vector<Record> list_by(EntityKind kind, std::string_view field,
                                      const nlohmann::json& value) const = 0;

  /// Replaces the body iff the stored version equals `expected_version`, then bumps the
  /// version. Throws Error(version_conflict) or Error(not_found).
  virtual Record compare_and_update(EntityKind kind, std::string_view id,
                                    std::uint64_t expected_version, nlohmann::json data) = 0;

  /// Point-in-time copy of every record, ordered by kind then id.
  virtual std::vector<Record> dump() const = 0;

  /// Loads records into an empty store, preserving ids and versions.
  /// Throws Error(non_empty_target).
  virtual void restore(std::vector<Record> records) = 0;

  virtual std::size_t size() const = 0;
  virtual void clear() = 0;
};

}  // namespace pa
