#include "pa/embedded_store.hpp"

#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <mutex>

#include "pa/error.hpp"
#include "pa/snapshot.hpp"

namespace pa {
namespace {

using nlohmann::json;

constexpr const char* kSnapshotFile = "snapshot.ndjson";
constexpr const char* kJournalFile = "journal.ndjson";

std::string_view id_prefix(EntityKind kind) noexcept {
  switch (kind) {
    case EntityKind::candidate: return "cand";
    case EntityKind::employer: return "emp";
    case EntityKind::job: return "job";
    case EntityKind::skill: return "skill";
    case EntityKind::personality_result: return "pres";
    case EntityKind::personality_question: return "q";
    case EntityKind::personality_answer: return "pans";
    case EntityKind::shortlist: return "sl";
    case EntityKind::message: return "msg";
    case EntityKind::notification: return "ntf";
    case EntityKind::credential: return "cred";
    case EntityKind::feed: return "feed";
  }
  return "rec";
}

bool field_matches(const json& data, std::string_view field, const json& value) {
  const auto it = data.find(field);
  if (it == data.end()) return value.is_null();
  if (it->is_array() && !value.is_array()) {
    for (const auto& v : *it) {
      if (v == value) return true;
    }
    return false;
  }
  return *it == value;
}

json record_entry(const char* op, const Record& r) {
  return json{{"op", op}, {"kind", to_string(r.kind)}, {"id", r.id}, {"version", r.version},
              {"data", r.data}};
}

}  // namespace

EmbeddedStore::EmbeddedStore() = default;

EmbeddedStore::~EmbeddedStore() { close_journal(); }

std::unique_ptr<EmbeddedStore> EmbeddedStore::open(const std::filesystem::path& dir) {
  return open(dir, Options{});
}

std::unique_ptr<EmbeddedStore> EmbeddedStore::open(const std::filesystem::path& dir,
                                                   Options options) {
  std::filesystem::create_directories(dir);
  auto store = std::make_unique<EmbeddedStore>();
  store->options_ = options;

  if (const auto snap = dir / kSnapshotFile; std::filesystem::exists(snap)) {
    import_snapshot(*store, read_snapshot_file(snap));
  }
  if (const auto jpath = dir / kJournalFile; std::filesystem::exists(jpath)) {
    std::ifstream in(jpath, std::ios::binary);
    std::string line;
    while (std::getline(in, line)) {
      if (in.eof()) break;  // torn final write: no terminating newline
      if (line.empty()) continue;
      try {
        store->replay(json::parse(line));
      } catch (const json::exception& e) {
        throw Error(Errc::io_error, "corrupt journal line: " + std::string(e.what()));
      }
    }
  }

  store->dir_ = dir;
  if (options.compact_on_open) {
    store->compact();
  } else {
    store->open_journal();
  }
  return store;
}

void EmbeddedStore::open_journal() {
  journal_ = std::fopen((dir_ / kJournalFile).c_str(), "ab");
  if (journal_ == nullptr) {
    throw Error(Errc::io_error, "cannot open journal in " + dir_.string());
  }
}

void EmbeddedStore::close_journal() {
  if (journal_ != nullptr) {
    std::fclose(journal_);
    journal_ = nullptr;
  }
}

void EmbeddedStore::compact() {
  if (dir_.empty()) return;
  std::unique_lock lock(mutex_);
  close_journal();
  std::vector<Record> records;
  for (const auto& t : tables_) {
    for (const auto& [_, r] : t) records.push_back(r);
  }
  write_snapshot_file(make_snapshot(std::move(records)), dir_ / kSnapshotFile);
  if (std::filesystem::exists(dir_ / kJournalFile)) {
    std::filesystem::resize_file(dir_ / kJournalFile, 0);
  }
  open_journal();
}

void EmbeddedStore::journal(const json& entry) {
  if (journal_ == nullptr) return;
  const auto line = entry.dump() + '\n';
  if (std::fwrite(line.data(), 1, line.size(), journal_) != line.size() ||
      std::fflush(journal_) != 0) {
    throw Error(Errc::io_error, "journal append failed");
  }
  if (options_.sync_writes) ::fsync(::fileno(journal_));
}

void EmbeddedStore::replay(const json& entry) {
  const auto op = entry.at("op").get<std::string>();
  const auto kind = parse_entity_kind(entry.at("kind").get<std::string>());
  const auto id = entry.at("id").get<std::string>();
  if (op == "put") {
    insert_locked({kind, id, entry.at("version").get<std::uint64_t>(), entry.at("data")});
  } else if (op == "update") {
    replace_locked({kind, id, entry.at("version").get<std::uint64_t>(), entry.at("data")});
  } else if (op == "delete") {
    erase_locked(kind, id);
  } else if (op == "clear") {
    for (auto& t : tables_) t.clear();
    for (auto& k : keys_) k.clear();
    counters_.fill(0);
  } else {
    throw Error(Errc::io_error, "unknown journal op: " + op);
  }
}

std::string EmbeddedStore::next_id(EntityKind kind) {
  auto& t = table(kind);
  std::string id;
  do {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s-%08llu", std::string(id_prefix(kind)).c_str(),
                  static_cast<unsigned long long>(++counters_[static_cast<std::size_t>(kind)]));
    id = buf;
  } while (t.contains(id));
  return id;
}

void EmbeddedStore::note_id(EntityKind kind, std::string_view id) {
  const auto prefix = std::string(id_prefix(kind)) + "-";
  if (id.substr(0, prefix.size()) != prefix) return;
  std::uint64_t n = 0;
  const auto digits = id.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
    auto& c = counters_[static_cast<std::size_t>(kind)];
    c = std::max(c, n);
  }
}

void EmbeddedStore::insert_locked(Record record) {
  auto& t = table(record.kind);
  if (t.contains(record.id)) {
    throw Error(Errc::duplicate_key,
                std::string(to_string(record.kind)) + " id already exists: " + record.id);
  }
  const auto key = unique_key(record.kind, record.data);
  if (key && keys(record.kind).contains(*key)) {
    throw Error(Errc::duplicate_key,
                std::string(to_string(record.kind)) + " unique key already exists");
  }
  note_id(record.kind, record.id);
  if (key) keys(record.kind).emplace(*key, record.id);
  auto id = record.id;
  t.emplace(std::move(id), std::move(record));
}

void EmbeddedStore::erase_locked(EntityKind kind, std::string_view id) {
  auto& t = table(kind);
  const auto it = t.find(id);
  if (it == t.end()) {
    throw Error(Errc::not_found, std::string(to_string(kind)) + " not found: " + std::string(id));
  }
  if (const auto key = unique_key(kind, it->second.data)) keys(kind).erase(*key);
  t.erase(it);
}

void EmbeddedStore::replace_locked(Record record) {
  auto& t = table(record.kind);
  const auto it = t.find(record.id);
  if (it == t.end()) {
    throw Error(Errc::not_found,
                std::string(to_string(record.kind)) + " not found: " + record.id);
  }
  const auto old_key = unique_key(record.kind, it->second.data);
  const auto new_key = unique_key(record.kind, record.data);
  if (new_key && new_key != old_key) {
    if (keys(record.kind).contains(*new_key)) {
      throw Error(Errc::duplicate_key,
                  std::string(to_string(record.kind)) + " unique key already exists");
    }
    if (old_key) keys(record.kind).erase(*old_key);
    keys(record.kind).emplace(*new_key, record.id);
  } else if (!new_key && old_key) {
    keys(record.kind).erase(*old_key);
  }
  it->second = std::move(record);
}

Record EmbeddedStore::put(EntityKind kind, json data, std::string id) {
  std::unique_lock lock(mutex_);
  if (id.empty()) id = next_id(kind);
  if (const auto field = id_field(kind); !field.empty() && data.is_object()) {
    data[std::string(field)] = id;
  }
  Record record{kind, id, 1, std::move(data)};
  insert_locked(record);
  try {
    journal(record_entry("put", record));
  } catch (...) {
    erase_locked(kind, id);
    throw;
  }
  return record;
}

std::optional<Record> EmbeddedStore::find(EntityKind kind, std::string_view id) const {
  std::shared_lock lock(mutex_);
  const auto& t = table(kind);
  if (const auto it = t.find(id); it != t.end()) return it->second;
  return std::nullopt;
}

std::optional<Record> EmbeddedStore::find_unique(EntityKind kind, std::string_view key) const {
  std::shared_lock lock(mutex_);
  const auto& k = keys_[static_cast<std::size_t>(kind)];
  const auto it = k.find(key);
  if (it == k.end()) return std::nullopt;
  return table(kind).find(it->second)->second;
}

void EmbeddedStore::remove(EntityKind kind, std::string_view id) {
  std::unique_lock lock(mutex_);
  auto& t = table(kind);
  const auto it = t.find(id);
  if (it == t.end()) {
    throw Error(Errc::not_found, std::string(to_string(kind)) + " not found: " + std::string(id));
  }
  const Record saved = it->second;
  erase_locked(kind, id);
  try {
    journal(json{{"op", "delete"}, {"kind", to_string(kind)}, {"id", id}});
  } catch (...) {
    insert_locked(saved);
    throw;
  }
}

std::vector<Record> EmbeddedStore::list(EntityKind kind) const {
  std::shared_lock lock(mutex_);
  std::vector<Record> out;
  out.reserve(table(kind).size());
  for (const auto& [_, r] : table(kind)) out.push_back(r);
  return out;
}

std::vector<Record> EmbeddedStore::list_by(EntityKind kind, std::string_view field,
                                           const json& value) const {
  std::shared_lock lock(mutex_);
  std::vector<Record> out;
  for (const auto& [_, r] : table(kind)) {
    if (field_matches(r.data, field, value)) out.push_back(r);
  }
  return out;
}

Record EmbeddedStore::compare_and_update(EntityKind kind, std::string_view id,
                                         std::uint64_t expected_version, json data) {
  std::unique_lock lock(mutex_);
  auto& t = table(kind);
  const auto it = t.find(id);
  if (it == t.end()) {
    throw Error(Errc::not_found, std::string(to_string(kind)) + " not found: " + std::string(id));
  }
  if (it->second.version != expected_version) {
    throw Error(Errc::version_conflict,
                std::string(to_string(kind)) + " " + std::string(id) + " is at version " +
                    std::to_string(it->second.version) + ", expected " +
                    std::to_string(expected_version));
  }
  if (const auto field = id_field(kind); !field.empty() && data.is_object()) {
    data[std::string(field)] = std::string(id);
  }
  const Record saved = it->second;
  Record next{kind, std::string(id), expected_version + 1, std::move(data)};
  replace_locked(next);
  try {
    journal(record_entry("update", next));
  } catch (...) {
    replace_locked(saved);
    throw;
  }
  return next;
}

std::vector<Record> EmbeddedStore::dump() const {
  std::shared_lock lock(mutex_);
  std::vector<Record> out;
  for (const auto& t : tables_) {
    for (const auto& [_, r] : t) out.push_back(r);
  }
  return out;
}

void EmbeddedStore::restore(std::vector<Record> records) {
  std::unique_lock lock(mutex_);
  for (const auto& t : tables_) {
    if (!t.empty()) throw Error(Errc::non_empty_target, "restore target is not empty");
  }
  try {
    for (auto& r : records) {
      insert_locked(r);
      journal(record_entry("put", r));
    }
  } catch (...) {
    for (auto& t : tables_) t.clear();
    for (auto& k : keys_) k.clear();
    counters_.fill(0);
    journal(json{{"op", "clear"}, {"kind", "Candidate"}, {"id", ""}});
    throw;
  }
}

std::size_t EmbeddedStore::size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& t : tables_) n += t.size();
  return n;
}

void EmbeddedStore::clear() {
  std::unique_lock lock(mutex_);
  for (auto& t : tables_) t.clear();
  for (auto& k : keys_) k.clear();
  counters_.fill(0);
  journal(json{{"op", "clear"}, {"kind", "Candidate"}, {"id", ""}});
}

}  // namespace pa
