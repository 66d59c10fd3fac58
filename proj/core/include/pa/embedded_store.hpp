#pragma once

#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>

#include "pa/store.hpp"

namespace pa {

/// In-process store. Optionally file-backed: opened on a directory it replays
/// `snapshot.ndjson` plus an append-only `journal.ndjson`, and appends every mutation
/// to the journal before returning.
class EmbeddedStore final : public Store {
 public:
  struct Options {
    bool sync_writes = false;  // fsync after each journal append
    bool compact_on_open = true;
  };

  EmbeddedStore();
  ~EmbeddedStore() override;
  EmbeddedStore(const EmbeddedStore&) = delete;
  EmbeddedStore& operator=(const EmbeddedStore&) = delete;

  static std::unique_ptr<EmbeddedStore> open(const std::filesystem::path& dir);
  static std::unique_ptr<EmbeddedStore> open(const std::filesystem::path& dir, Options options);

  Record put(EntityKind kind, nlohmann::json data, std::string id = {}) override;
  std::optional<Record> find(EntityKind kind, std::string_view id) const override;
  std::optional<Record> find_unique(EntityKind kind, std::string_view key) const override;
  void remove(EntityKind kind, std::string_view id) override;
  std::vector<Record> list(EntityKind kind) const override;
  std::vector<Record> list_by(EntityKind kind, std::string_view field,
                              const nlohmann::json& value) const override;
  Record compare_and_update(EntityKind kind, std::string_view id, std::uint64_t expected_version,
                            nlohmann::json data) override;
  std::vector<Record> dump() const override;
  void restore(std::vector<Record> records) override;
  std::size_t size() const override;
  void clear() override;

  /// Rewrites the snapshot file from current state and truncates the journal.
  /// No-op for a memory-only store.
  void compact();

  bool file_backed() const noexcept { return !dir_.empty(); }

 private:
  using Table = std::map<std::string, Record, std::less<>>;
  using KeyIndex = std::map<std::string, std::string, std::less<>>;

  Table& table(EntityKind kind) { return tables_[static_cast<std::size_t>(kind)]; }
  const Table& table(EntityKind kind) const { return tables_[static_cast<std::size_t>(kind)]; }
  KeyIndex& keys(EntityKind kind) { return keys_[static_cast<std::size_t>(kind)]; }

  std::string next_id(EntityKind kind);
  void note_id(EntityKind kind, std::string_view id);
  void insert_locked(Record record);
  void erase_locked(EntityKind kind, std::string_view id);
  void replace_locked(Record record);
  void journal(const nlohmann::json& entry);
  void replay(const nlohmann::json& entry);
  void close_journal();
  void open_journal();

  mutable std::shared_mutex mutex_;
  std::array<Table, kEntityKindCount> tables_;
  std::array<KeyIndex, kEntityKindCount> keys_;
  std::array<std::uint64_t, kEntityKindCount> counters_{};

  std::filesystem::path dir_;
  Options options_;
  std::FILE* journal_ = nullptr;
};

}  // namespace pa
