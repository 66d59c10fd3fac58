#include "pa/shortlist.hpp"

#include <algorithm>
#include <cctype>

#include "pa/error.hpp"

namespace pa {
namespace {

using nlohmann::json;

[[noreturn]] void fail(Errc code, const ShortlistEvent& e, std::string_view why) {
  throw Error(code, std::string(to_string(e.type)) + ": " + std::string(why));
}

std::size_t utf8_length(std::string_view s) noexcept {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

json stamp(const std::optional<Timestamp>& t) {
  return t ? json(format_timestamp(*t)) : json(nullptr);
}

std::optional<Timestamp> read_stamp(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return parse_timestamp(v.get<std::string>());
}

std::string_view to_string(VideoStatus s) noexcept {
  switch (s) {
    case VideoStatus::none: return "none";
    case VideoStatus::requested: return "requested";
    case VideoStatus::accepted: return "accepted";
  }
  return "none";
}

VideoStatus parse_video_status(std::string_view s) {
  if (s == "none") return VideoStatus::none;
  if (s == "requested") return VideoStatus::requested;
  if (s == "accepted") return VideoStatus::accepted;
  throw Error(Errc::invalid_argument, "unknown video status: " + std::string(s));
}

}  // namespace

std::string_view to_string(Party p) noexcept {
  return p == Party::employer ? "employer" : "candidate";
}

Party parse_party(std::string_view name) {
  if (name == "employer") return Party::employer;
  if (name == "candidate") return Party::candidate;
  throw Error(Errc::invalid_argument, "unknown party: " + std::string(name));
}

std::string_view to_string(EventType t) noexcept {
  switch (t) {
    case EventType::employer_shortlists: return "employer_shortlists";
    case EventType::candidate_shortlists: return "candidate_shortlists";
    case EventType::employer_initiates_contact: return "employer_initiates_contact";
    case EventType::candidate_accepts_contact: return "candidate_accepts_contact";
    case EventType::video_requested: return "video_requested";
    case EventType::video_accepted: return "video_accepted";
  }
  return "unknown";
}

std::optional<Party> required_party(EventType type) noexcept {
  switch (type) {
    case EventType::employer_shortlists:
    case EventType::employer_initiates_contact: return Party::employer;
    case EventType::candidate_shortlists:
    case EventType::candidate_accepts_contact: return Party::candidate;
    case EventType::video_requested:
    case EventType::video_accepted: return std::nullopt;
  }
  return std::nullopt;
}

int ShortlistRecord::stage() const noexcept {
  return static_cast<int>(employer_shortlisted.has_value()) +
         static_cast<int>(candidate_shortlisted.has_value()) +
         static_cast<int>(contact_initiated.has_value()) +
         static_cast<int>(contact_accepted.has_value());
}

bool ShortlistRecord::invariants_hold() const noexcept {
  if (contact_initiated && !(employer_shortlisted && candidate_shortlisted)) return false;
  if (contact_accepted && !contact_initiated) return false;
  if (video.status != VideoStatus::none && stage() != 4) return false;
  if (video.status != VideoStatus::none && !video.requested_by) return false;
  if (message_count > 0 && stage() != 4) return false;
  return true;
}

bool messaging_enabled(const ShortlistRecord& r) noexcept { return r.stage() == 4; }

ShortlistRecord apply_event(const ShortlistRecord& record, const ShortlistEvent& e) {
  if (auto party = required_party(e.type); party && *party != e.actor) {
    fail(Errc::wrong_actor, e, "must be performed by the " + std::string(to_string(*party)));
  }

  ShortlistRecord next = record;
  switch (e.type) {
    case EventType::employer_shortlists:
      if (record.employer_shortlisted) fail(Errc::duplicate_event, e, "already shortlisted");
      next.employer_shortlisted = e.at;
      break;
    case EventType::candidate_shortlists:
      if (record.candidate_shortlisted) fail(Errc::duplicate_event, e, "already shortlisted");
      next.candidate_shortlisted = e.at;
      break;
    case EventType::employer_initiates_contact:
      if (record.contact_initiated) fail(Errc::duplicate_event, e, "contact already initiated");
      if (!record.employer_shortlisted || !record.candidate_shortlisted) {
        fail(Errc::precondition_failed, e, "both sides must shortlist first");
      }
      next.contact_initiated = e.at;
      break;
    case EventType::candidate_accepts_contact:
      if (record.contact_accepted) fail(Errc::duplicate_event, e, "contact already accepted");
      if (!record.contact_initiated) fail(Errc::precondition_failed, e, "no contact request");
      next.contact_accepted = e.at;
      break;
    case EventType::video_requested:
      if (record.video.status != VideoStatus::none) {
        fail(Errc::duplicate_event, e, "video already requested");
      }
      if (!messaging_enabled(record)) fail(Errc::precondition_failed, e, "handshake incomplete");
      next.video.status = VideoStatus::requested;
      next.video.requested_by = e.actor;
      next.video.requested_at = e.at;
      break;
    case EventType::video_accepted:
      if (record.video.status == VideoStatus::accepted) {
        fail(Errc::duplicate_event, e, "video already accepted");
      }
      if (record.video.status == VideoStatus::none) {
        fail(Errc::precondition_failed, e, "no video request");
      }
      if (record.video.requested_by == e.actor) {
        fail(Errc::wrong_actor, e, "the requesting party cannot accept its own request");
      }
      next.video.status = VideoStatus::accepted;
      next.video.accepted_at = e.at;
      break;
  }
  return next;
}

std::string stage_description(const ShortlistRecord& r) {
  const std::string prefix = std::to_string(r.stage()) + "/4, ";
  if (!r.employer_shortlisted && !r.candidate_shortlisted) return prefix + "awaiting shortlists";
  if (!r.employer_shortlisted) return prefix + "awaiting employer shortlist";
  if (!r.candidate_shortlisted) return prefix + "awaiting candidate shortlist";
  if (!r.contact_initiated) return prefix + "awaiting employer contact";
  if (!r.contact_accepted) return prefix + "awaiting candidate response";
  return prefix + "messaging enabled";
}

SentMessage send_message(const ShortlistRecord& record, Party sender, std::string body,
                         Timestamp at) {
  if (!messaging_enabled(record)) {
    throw Error(Errc::messaging_not_enabled,
                "messaging requires all four handshake stages (" + stage_description(record) + ")");
  }
  if (std::all_of(body.begin(), body.end(),
                  [](unsigned char c) { return std::isspace(c) != 0; })) {
    throw Error(Errc::empty_body, "message body is empty");
  }
  if (utf8_length(body) > kMaxMessageLength) {
    throw Error(Errc::invalid_argument, "message body exceeds 4096 characters");
  }
  SentMessage out{record, {}};
  out.record.message_count += 1;
  out.message.job_id = record.job_id;
  out.message.candidate_id = record.candidate_id;
  out.message.sender = sender;
  out.message.body = std::move(body);
  out.message.sent_at = at;
  out.message.position = out.record.message_count;
  return out;
}

void to_json(json& j, const ShortlistRecord& v) {
  j = json{{"job_id", v.job_id},
           {"candidate_id", v.candidate_id},
           {"employer_shortlisted", stamp(v.employer_shortlisted)},
           {"candidate_shortlisted", stamp(v.candidate_shortlisted)},
           {"contact_initiated", stamp(v.contact_initiated)},
           {"contact_accepted", stamp(v.contact_accepted)},
           {"video",
            {{"status", to_string(v.video.status)},
             {"requested_by",
              v.video.requested_by ? json(to_string(*v.video.requested_by)) : json(nullptr)},
             {"requested_at", stamp(v.video.requested_at)},
             {"accepted_at", stamp(v.video.accepted_at)}}},
           {"message_count", v.message_count}};
}

void from_json(const json& j, ShortlistRecord& v) {
  v.job_id = JobId{j.at("job_id").get<std::string>()};
  v.candidate_id = CandidateId{j.at("candidate_id").get<std::string>()};
  v.employer_shortlisted = read_stamp(j, "employer_shortlisted");
  v.candidate_shortlisted = read_stamp(j, "candidate_shortlisted");
  v.contact_initiated = read_stamp(j, "contact_initiated");
  v.contact_accepted = read_stamp(j, "contact_accepted");
  const auto& video = j.at("video");
  v.video.status = parse_video_status(video.at("status").get<std::string>());
  if (video.at("requested_by").is_null()) {
    v.video.requested_by.reset();
  } else {
    v.video.requested_by = parse_party(video.at("requested_by").get<std::string>());
  }
  v.video.requested_at = read_stamp(video, "requested_at");
  v.video.accepted_at = read_stamp(video, "accepted_at");
  v.message_count = j.value("message_count", std::uint64_t{0});
}

void to_json(json& j, const Message& v) {
  j = json{{"message_id", v.message_id},
           {"job_id", v.job_id},
           {"candidate_id", v.candidate_id},
           {"sender", to_string(v.sender)},
           {"body", v.body},
           {"sent_at", format_timestamp(v.sent_at)},
           {"position", v.position}};
}

void from_json(const json& j, Message& v) {
  v.message_id = MessageId{j.value("message_id", std::string{})};
  v.job_id = JobId{j.at("job_id").get<std::string>()};
  v.candidate_id = CandidateId{j.at("candidate_id").get<std::string>()};
  v.sender = parse_party(j.at("sender").get<std::string>());
  v.body = j.at("body").get<std::string>();
  v.sent_at = parse_timestamp(j.at("sent_at").get<std::string>());
  v.position = j.at("position").get<std::uint64_t>();
}

}  // namespace pa
