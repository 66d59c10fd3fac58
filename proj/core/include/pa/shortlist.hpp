#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pa/date.hpp"
#include "pa/ids.hpp"

namespace pa {

enum class Party { employer, candidate };

std::string_view to_string(Party p) noexcept;
Party parse_party(std::string_view name);
constexpr Party opposite(Party p) noexcept {
  return p == Party::employer ? Party::candidate : Party::employer;
}

enum class VideoStatus { none, requested, accepted };

struct VideoState {
  VideoStatus status = VideoStatus::none;
  std::optional<Party> requested_by;
  std::optional<Timestamp> requested_at;
  std::optional<Timestamp> accepted_at;

  bool operator==(const VideoState&) const = default;
};

/// The four-stage mutual handshake for one (job, candidate) pair.
///
/// Stages 1 and 2 (the two shortlists) may happen in either order; contact
/// initiation needs both, and contact acceptance needs initiation. Messaging and
/// video signaling unlock only once all four are set. No event ever clears a stage.
struct ShortlistRecord {
  JobId job_id;
  CandidateId candidate_id;
  std::optional<Timestamp> employer_shortlisted;
  std::optional<Timestamp> candidate_shortlisted;
  std::optional<Timestamp> contact_initiated;
  std::optional<Timestamp> contact_accepted;
  VideoState video;
  std::uint64_t message_count = 0;

  /// Number of stages completed, 0..4.
  int stage() const noexcept;
  bool invariants_hold() const noexcept;

  bool operator==(const ShortlistRecord&) const = default;
};

enum class EventType {
  employer_shortlists,
  candidate_shortlists,
  employer_initiates_contact,
  candidate_accepts_contact,
  video_requested,
  video_accepted,
};

std::string_view to_string(EventType t) noexcept;

struct ShortlistEvent {
  EventType type;
  Party actor;
  Timestamp at{};
};

/// The party an event type demands, or nullopt for video events (either side may act).
std::optional<Party> required_party(EventType type) noexcept;

/// Advances exactly one stage or video state. Errors are checked in order:
/// wrong_actor, duplicate_event, precondition_failed.
ShortlistRecord apply_event(const ShortlistRecord& record, const ShortlistEvent& event);

bool messaging_enabled(const ShortlistRecord& record) noexcept;

/// "2/4, awaiting employer contact" style projection for status endpoints.
std::string stage_description(const ShortlistRecord& record);

inline constexpr std::size_t kMaxMessageLength = 4096;  // characters (code points)

struct Message {
  MessageId message_id;
  JobId job_id;
  CandidateId candidate_id;
  Party sender = Party::employer;
  std::string body;
  Timestamp sent_at{};
  std::uint64_t position = 0;  // 1-based, per pair

  bool operator==(const Message&) const = default;
};

struct SentMessage {
  ShortlistRecord record;  // with message_count advanced
  Message message;
};

/// Throws Error(messaging_not_enabled), Error(empty_body), or Error(invalid_argument)
/// for a body longer than kMaxMessageLength characters.
SentMessage send_message(const ShortlistRecord& record, Party sender, std::string body,
                         Timestamp at);

void to_json(nlohmann::json& j, const ShortlistRecord& v);
void from_json(const nlohmann::json& j, ShortlistRecord& v);
void to_json(nlohmann::json& j, const Message& v);
void from_json(const nlohmann::json& j, Message& v);

}  // namespace pa
