#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pa/store.hpp"

namespace pa {

inline constexpr int kSnapshotSchemaVersion = 1;

/// Whole-store export. Serialized as line-delimited JSON (see docs/snapshot_format.md):
/// a header line, one kind-tagged line per record ordered by kind then id, and a trailer
/// line holding the SHA-256 of every preceding byte.
struct StoreSnapshot {
  int schema_version = kSnapshotSchemaVersion;
  std::vector<Record> records;
  std::string digest;  // hex SHA-256 of the serialized content lines

  bool operator==(const StoreSnapshot&) const = default;
};

/// Builds a snapshot (and its digest) from records already in kind/id order.
StoreSnapshot make_snapshot(std::vector<Record> records);
StoreSnapshot export_snapshot(const Store& store);

/// Canonical text form; identical snapshots serialize to identical bytes.
std::string serialize(const StoreSnapshot& snapshot);

/// Throws Error(digest_mismatch), Error(unsupported_schema) or Error(validation_failed).
StoreSnapshot parse_snapshot(std::string_view text);

/// Verifies the digest and referential closure, then loads into an empty store.
/// Throws Error(non_empty_target), Error(digest_mismatch), Error(integrity_failure).
void import_snapshot(Store& target, const StoreSnapshot& snapshot);

void write_snapshot_file(const StoreSnapshot& snapshot, const std::filesystem::path& path);
StoreSnapshot read_snapshot_file(const std::filesystem::path& path);

}  // namespace pa
