#include "pa/snapshot.hpp"

#include <fstream>
#include <sstream>

#include "pa/digest.hpp"
#include "pa/error.hpp"
#include "pa/integrity.hpp"

namespace pa {
namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "profile-analyst-snapshot";

std::string content_lines(const StoreSnapshot& s) {
  std::string out =
      json{{"format", kFormatName}, {"schema_version", s.schema_version}}.dump() + '\n';
  for (const auto& r : s.records) {
    out += json{{"kind", to_string(r.kind)}, {"id", r.id}, {"version", r.version}, {"data", r.data}}
               .dump();
    out += '\n';
  }
  return out;
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::validation_failed, "malformed snapshot: " + why);
}

}  // namespace

StoreSnapshot make_snapshot(std::vector<Record> records) {
  StoreSnapshot s;
  s.records = std::move(records);
  s.digest = sha256_hex(content_lines(s));
  return s;
}

StoreSnapshot export_snapshot(const Store& store) { return make_snapshot(store.dump()); }

std::string serialize(const StoreSnapshot& snapshot) {
  return content_lines(snapshot) + json{{"digest", snapshot.digest}}.dump() + '\n';
}

StoreSnapshot parse_snapshot(std::string_view text) {
  if (text.empty() || text.back() != '\n') malformed("missing trailing newline");
  const auto body_end = text.rfind('\n', text.size() - 2);
  if (body_end == std::string_view::npos) malformed("missing digest trailer");
  const std::string_view content = text.substr(0, body_end + 1);
  const std::string_view trailer = text.substr(body_end + 1, text.size() - body_end - 2);

  StoreSnapshot s;
  try {
    const auto t = json::parse(trailer);
    s.digest = t.at("digest").get<std::string>();
  } catch (const json::exception& e) {
    malformed(std::string("digest trailer: ") + e.what());
  }

  std::istringstream lines{std::string(content)};
  std::string line;
  if (!std::getline(lines, line)) malformed("missing header");
  try {
    const auto header = json::parse(line);
    if (header.at("format").get<std::string>() != kFormatName) malformed("unknown format");
    s.schema_version = header.at("schema_version").get<int>();
  } catch (const json::exception& e) {
    malformed(std::string("header: ") + e.what());
  }
  if (s.schema_version != kSnapshotSchemaVersion) {
    throw Error(Errc::unsupported_schema,
                "snapshot schema_version " + std::to_string(s.schema_version) +
                    " unsupported (this build reads " + std::to_string(kSnapshotSchemaVersion) + ")");
  }
  if (sha256_hex(content) != s.digest) {
    throw Error(Errc::digest_mismatch, "snapshot digest does not match content");
  }

  while (std::getline(lines, line)) {
    try {
      const auto j = json::parse(line);
      s.records.push_back({parse_entity_kind(j.at("kind").get<std::string>()),
                           j.at("id").get<std::string>(), j.at("version").get<std::uint64_t>(),
                           j.at("data")});
    } catch (const json::exception& e) {
      malformed(std::string("record: ") + e.what());
    }
  }
  return s;
}

void import_snapshot(Store& target, const StoreSnapshot& snapshot) {
  if (target.size() != 0) throw Error(Errc::non_empty_target, "import target is not empty");
  if (snapshot.schema_version != kSnapshotSchemaVersion) {
    throw Error(Errc::unsupported_schema, "snapshot schema_version unsupported");
  }
  StoreSnapshot check = snapshot;
  check.digest = sha256_hex(content_lines(snapshot));
  if (check.digest != snapshot.digest) {
    throw Error(Errc::digest_mismatch, "snapshot digest does not match content");
  }
  if (auto dangling = check_integrity(snapshot.records); !dangling.empty()) {
    throw Error(Errc::integrity_failure, std::to_string(dangling.size()) +
                                             " dangling reference(s), first: " +
                                             describe(dangling.front()));
  }
  target.restore(snapshot.records);
}

void write_snapshot_file(const StoreSnapshot& snapshot, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    out << serialize(snapshot);
    out.flush();
    if (!out) throw Error(Errc::io_error, "write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

StoreSnapshot read_snapshot_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open snapshot: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_snapshot(buf.str());
}

}  // namespace pa
