#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pa/analyst.hpp"
#include "pa/config.hpp"
#include "pa/personality.hpp"
#include "pa/shortlist.hpp"
#include "pa/store.hpp"

namespace pa::api {

/// Transport-neutral request; the HTTP adapter fills it from the wire.
struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
  std::string authorization;  // raw Authorization header
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Error codes carried in every non-success response body:
/// {"error": {"code": ..., "message": ..., "details": [...]}}
inline constexpr const char* kErrorCodes[] = {"validation_failed", "not_found",
                                              "precondition_failed", "duplicate",
                                              "conflict",          "unauthorized",
                                              "internal"};

inline constexpr int kDefaultPageLimit = 50;
inline constexpr int kMaxPageLimit = 500;
inline constexpr int kHandshakeRetries = 3;

enum class NotificationKind {
  shortlisted,
  contact_requested,
  contact_accepted,
  message_received,
  video_requested,
  video_accepted,
};

std::string_view to_string(NotificationKind kind) noexcept;

struct Principal {
  Party party = Party::candidate;
  std::string subject_id;  // candidate id, or employer id for HR contacts
  std::string contact_id;  // HR contact, employer side only
};

/// The JSON-over-HTTP command surface (routes in docs/api.md). Stateless across
/// requests: everything lives in the store. Handshake mutations go through
/// compare_and_update with bounded retry; registrations and job lifecycle changes,
/// which refresh materialized feeds, are serialized.
class Service {
 public:
  Service(Store& store, ServiceConfig config, Clock clock = system_clock());

  Response handle(const Request& request);

  const QuizBank& bank() const noexcept { return bank_; }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Context;
  using Handler = Response (Service::*)(const Context&);
  struct Route {
    std::string method;
    std::vector<std::string> segments;  // ":name" segments capture
    Handler handler;
  };

  Response health(const Context&);
  Response get_quiz(const Context&);
  Response list_skills(const Context&);
  Response create_skill(const Context&);
  Response skill_demand(const Context&);

  Response register_candidate(const Context&);
  Response get_candidate(const Context&);
  Response update_candidate(const Context&);
  Response submit_quiz(const Context&);
  Response get_personality(const Context&);
  Response candidate_feed(const Context&);
  Response candidate_applications(const Context&);

  Response register_employer(const Context&);
  Response get_employer(const Context&);
  Response update_employer(const Context&);
  Response register_contact(const Context&);
  Response employer_jobs(const Context&);

  Response post_job(const Context&);
  Response get_job(const Context&);
  Response close_job(const Context&);
  Response job_feed(const Context&);

  Response pair_status(const Context&);
  Response employer_shortlist(const Context&);
  Response candidate_shortlist(const Context&);
  Response initiate_contact(const Context&);
  Response accept_contact(const Context&);
  Response request_video(const Context&);
  Response accept_video(const Context&);
  Response send_chat_message(const Context&);
  Response list_messages(const Context&);

  Response list_notifications(const Context&);
  Response mark_notification_read(const Context&);

  // helpers
  Date today() const;
  std::optional<Principal> authenticate(const Request& request) const;
  std::string issue_token(Party party, const std::string& subject_id,
                          const std::string& contact_id);
  std::set<SkillId> catalog() const;
  std::vector<CandidateProfile> candidates_sharing_skills(const JobListing& job) const;
  std::vector<JobListing> open_jobs() const;
  Feed compute_job_feed(const JobListing& job) const;
  Feed compute_candidate_feed(const CandidateProfile& candidate) const;
  void persist_feed(const Feed& feed);
  void drop_feed(FeedSide side, const std::string& owner);
  Feed current_feed(FeedSide side, const std::string& owner);
  void refresh_after_candidate_change(const CandidateProfile& candidate);
  void refresh_after_job_change(const JobListing& job);
  void upsert(EntityKind kind, const std::string& key, const nlohmann::json& data);
  void sync_bank();

  ShortlistRecord handshake(const Context& ctx, EventType type,
                            std::optional<NotificationKind> notify);
  void notify(Party recipient, const ShortlistRecord& pair, NotificationKind kind);
  nlohmann::json status_json(const ShortlistRecord& record) const;
  bool contact_unlocked(const std::string& employer_id, const std::string& candidate_id) const;
  nlohmann::json feed_page(const Feed& feed, const Context& ctx, const Principal* viewer) const;

  Store& store_;
  ServiceConfig config_;
  Clock clock_;
  QuizBank bank_;
  std::vector<Route> routes_;
  std::mutex catalog_mutex_;
};

}  // namespace pa::api
