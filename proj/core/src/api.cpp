#include "pa/api.hpp"

#include <openssl/rand.h>

#include <algorithm>
#include <charconv>

#include "pa/digest.hpp"
#include "pa/domain_json.hpp"
#include "pa/error.hpp"

namespace pa::api {
namespace {

using nlohmann::json;

/// A fully-formed error response.
struct ApiFailure {
  int status;
  std::string code;
  std::string message;
  json details = json::array();
};

[[noreturn]] void fail(int status, std::string code, std::string message,
                       json details = json::array()) {
  throw ApiFailure{status, std::move(code), std::move(message), std::move(details)};
}

[[noreturn]] void fail_validation(const std::string& message, const ValidationReport& report) {
  json details = json::array();
  for (const auto& v : report.violations) {
    details.push_back({{"rule", v.rule}, {"detail", v.detail}});
  }
  fail(400, "validation_failed", message, std::move(details));
}

ApiFailure from_error(const Error& e) {
  switch (e.code()) {
    case Errc::validation_failed:
    case Errc::invalid_argument:
    case Errc::incomplete_response:
    case Errc::unknown_question:
    case Errc::empty_body:
    case Errc::invalid_config: return {400, "validation_failed", e.what()};
    case Errc::not_found: return {404, "not_found", e.what()};
    case Errc::duplicate_key:
    case Errc::duplicate_event: return {409, "duplicate", e.what()};
    case Errc::version_conflict: return {409, "conflict", e.what()};
    case Errc::precondition_failed:
    case Errc::job_closed:
    case Errc::messaging_not_enabled: return {422, "precondition_failed", e.what()};
    case Errc::wrong_actor: return {403, "unauthorized", e.what()};
    case Errc::unauthorized: return {401, "unauthorized", e.what()};
    default: return {500, "internal", e.what()};
  }
}

Response error_response(const ApiFailure& f) {
  json err{{"code", f.code}, {"message", f.message}};
  if (!f.details.empty()) err["details"] = f.details;
  return {f.status, json{{"error", err}}};
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < path.size()) {
    if (path[pos] == '/') {
      ++pos;
      continue;
    }
    const auto next = path.find('/', pos);
    out.emplace_back(path.substr(pos, next == std::string_view::npos ? path.size() - pos : next - pos));
    pos = next == std::string_view::npos ? path.size() : next;
  }
  return out;
}

std::string random_token() {
  unsigned char bytes[32];
  if (RAND_bytes(bytes, sizeof bytes) != 1) throw Error(Errc::io_error, "RAND_bytes failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xF]);
  }
  return out;
}

std::string pair_key(const std::string& job_id, const std::string& candidate_id) {
  return job_id + '\x1f' + candidate_id;
}

std::string feed_key(FeedSide side, const std::string& owner) {
  return std::string(to_string(side)) + '\x1f' + owner;
}

template <class T>
T decode(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    fail(400, "validation_failed", std::string("malformed ") + what + ": " + e.what());
  } catch (const Error& e) {
    fail(400, "validation_failed", std::string("malformed ") + what + ": " + e.what());
  }
}

json redacted(json candidate) {
  candidate["email"] = nullptr;
  return candidate;
}

json contact_public(const HRContact& c) {
  return json{{"contact_id", c.contact_id}, {"name", c.name}, {"phone", nullptr}, {"email", nullptr}};
}

}  // namespace

std::string_view to_string(NotificationKind kind) noexcept {
  switch (kind) {
    case NotificationKind::shortlisted: return "shortlisted";
    case NotificationKind::contact_requested: return "contact_requested";
    case NotificationKind::contact_accepted: return "contact_accepted";
    case NotificationKind::message_received: return "message_received";
    case NotificationKind::video_requested: return "video_requested";
    case NotificationKind::video_accepted: return "video_accepted";
  }
  return "shortlisted";
}

struct Service::Context {
  const Request& request;
  std::map<std::string, std::string> params;
  std::optional<Principal> principal;

  const std::string& param(const std::string& name) const { return params.at(name); }

  json body() const {
    if (request.body.empty()) return json::object();
    try {
      auto j = json::parse(request.body);
      if (!j.is_object()) fail(400, "validation_failed", "request body must be a JSON object");
      return j;
    } catch (const json::parse_error& e) {
      fail(400, "validation_failed", std::string("request body is not valid JSON: ") + e.what());
    }
  }

  const Principal& who() const {
    if (!principal) fail(401, "unauthorized", "missing or invalid bearer token");
    return *principal;
  }

  const Principal& candidate(const std::string& candidate_id) const {
    const auto& p = who();
    if (p.party != Party::candidate || p.subject_id != candidate_id) {
      fail(403, "unauthorized", "only candidate " + candidate_id + " may do this");
    }
    return p;
  }

  const Principal& employer(const std::string& employer_id) const {
    const auto& p = who();
    if (p.party != Party::employer || p.subject_id != employer_id) {
      fail(403, "unauthorized", "only contacts of employer " + employer_id + " may do this");
    }
    return p;
  }

  int page_param(const char* name, int fallback, int max, int min = 0) const {
    const auto it = request.query.find(name);
    if (it == request.query.end()) return fallback;
    int v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < min || v > max) {
      fail(400, "validation_failed", std::string("bad ") + name + " parameter: " + s);
    }
    return v;
  }
};

Service::Service(Store& store, ServiceConfig config, Clock clock)
    : store_(store), config_(std::move(config)), clock_(std::move(clock)) {
  if (auto report = validate_weights(config_.analyst.weights); !report.ok()) {
    throw Error(Errc::invalid_config, "invalid weights: " + report.summary());
  }
  bank_ = config_.quiz_bank_path ? load_bank_file(config_.quiz_bank_path->string()) : default_bank();
  if (auto report = validate_bank(bank_); !report.ok()) {
    throw Error(Errc::invalid_config, "invalid quiz bank: " + report.summary());
  }
  sync_bank();

  const auto add = [this](std::string method, std::string_view pattern, Handler h) {
    routes_.push_back({std::move(method), split_path(pattern), h});
  };
  add("GET", "/api/health", &Service::health);
  add("GET", "/api/quiz", &Service::get_quiz);
  add("GET", "/api/skills", &Service::list_skills);
  add("POST", "/api/skills", &Service::create_skill);
  add("GET", "/api/stats/skill-demand", &Service::skill_demand);

  add("POST", "/api/candidates", &Service::register_candidate);
  add("GET", "/api/candidates/:cid", &Service::get_candidate);
  add("PUT", "/api/candidates/:cid", &Service::update_candidate);
  add("POST", "/api/candidates/:cid/quiz", &Service::submit_quiz);
  add("GET", "/api/candidates/:cid/personality", &Service::get_personality);
  add("GET", "/api/candidates/:cid/feed", &Service::candidate_feed);
  add("GET", "/api/candidates/:cid/applications", &Service::candidate_applications);

  add("POST", "/api/employers", &Service::register_employer);
  add("GET", "/api/employers/:eid", &Service::get_employer);
  add("PUT", "/api/employers/:eid", &Service::update_employer);
  add("POST", "/api/employers/:eid/contacts", &Service::register_contact);
  add("GET", "/api/employers/:eid/jobs", &Service::employer_jobs);

  add("POST", "/api/jobs", &Service::post_job);
  add("GET", "/api/jobs/:jid", &Service::get_job);
  add("POST", "/api/jobs/:jid/close", &Service::close_job);
  add("GET", "/api/jobs/:jid/feed", &Service::job_feed);

  add("GET", "/api/shortlists/:jid/:cid", &Service::pair_status);
  add("POST", "/api/shortlists/:jid/:cid/employer-shortlist", &Service::employer_shortlist);
  add("POST", "/api/shortlists/:jid/:cid/candidate-shortlist", &Service::candidate_shortlist);
  add("POST", "/api/shortlists/:jid/:cid/contact", &Service::initiate_contact);
  add("POST", "/api/shortlists/:jid/:cid/contact/accept", &Service::accept_contact);
  add("POST", "/api/shortlists/:jid/:cid/video/request", &Service::request_video);
  add("POST", "/api/shortlists/:jid/:cid/video/accept", &Service::accept_video);
  add("POST", "/api/shortlists/:jid/:cid/messages", &Service::send_chat_message);
  add("GET", "/api/shortlists/:jid/:cid/messages", &Service::list_messages);

  add("GET", "/api/notifications", &Service::list_notifications);
  add("POST", "/api/notifications/:nid/read", &Service::mark_notification_read);
}

Response Service::handle(const Request& request) {
  try {
    const auto segments = split_path(request.path);
    bool path_known = false;
    for (const auto& route : routes_) {
      if (route.segments.size() != segments.size()) continue;
      std::map<std::string, std::string> params;
      bool match = true;
      for (std::size_t i = 0; i < segments.size() && match; ++i) {
        const auto& pat = route.segments[i];
        if (!pat.empty() && pat[0] == ':') {
          params[pat.substr(1)] = segments[i];
        } else {
          match = pat == segments[i];
        }
      }
      if (!match) continue;
      path_known = true;
      if (route.method != request.method) continue;
      Context ctx{request, std::move(params), authenticate(request)};
      return (this->*route.handler)(ctx);
    }
    fail(404, "not_found",
         (path_known ? "method not allowed: " : "no such endpoint: ") + request.method + " " +
             request.path);
  } catch (const ApiFailure& f) {
    return error_response(f);
  } catch (const Error& e) {
    return error_response(from_error(e));
  } catch (const json::exception& e) {
    return error_response({400, "validation_failed", e.what()});
  } catch (const std::exception& e) {
    return error_response({500, "internal", e.what()});
  }
}

// ---------------------------------------------------------------------------
// helpers

Date Service::today() const { return date_of(clock_()); }

std::optional<Principal> Service::authenticate(const Request& request) const {
  constexpr std::string_view kBearer = "Bearer ";
  const std::string_view header = request.authorization;
  if (header.substr(0, kBearer.size()) != kBearer) return std::nullopt;
  const auto token = header.substr(kBearer.size());
  if (token.empty()) return std::nullopt;
  const auto rec = store_.find_unique(EntityKind::credential, sha256_hex(token));
  if (!rec) return std::nullopt;
  return Principal{parse_party(rec->data.at("party").get<std::string>()),
                   rec->data.at("subject_id").get<std::string>(),
                   rec->data.value("contact_id", std::string{})};
}

std::string Service::issue_token(Party party, const std::string& subject_id,
                                 const std::string& contact_id) {
  auto token = random_token();
  store_.put(EntityKind::credential, json{{"token_hash", sha256_hex(token)},
                                          {"party", to_string(party)},
                                          {"subject_id", subject_id},
                                          {"contact_id", contact_id},
                                          {"issued_at", format_timestamp(clock_())}});
  return token;
}

std::set<SkillId> Service::catalog() const {
  std::set<SkillId> out;
  for (const auto& r : store_.list(EntityKind::skill)) out.insert(SkillId{r.id});
  return out;
}

std::vector<CandidateProfile> Service::candidates_sharing_skills(const JobListing& job) const {
  // Skill overlap is the one filter pushed down to storage; salary and scoring stay here.
  std::map<std::string, CandidateProfile> found;
  for (const auto& skill : job.required_skills) {
    for (const auto& r : store_.list_by(EntityKind::candidate, "skills", skill.value)) {
      if (!found.contains(r.id)) found.emplace(r.id, r.data.get<CandidateProfile>());
    }
  }
  std::vector<CandidateProfile> out;
  out.reserve(found.size());
  for (auto& [_, c] : found) out.push_back(std::move(c));
  return out;
}

std::vector<JobListing> Service::open_jobs() const {
  std::vector<JobListing> out;
  for (const auto& r : store_.list_by(EntityKind::job, "status", "open")) {
    out.push_back(r.data.get<JobListing>());
  }
  return out;
}

Feed Service::compute_job_feed(const JobListing& job) const {
  const auto pool = candidates_sharing_skills(job);
  auto feed = rank_candidates(job, pool, config_.analyst, today());
  feed.generated_at = clock_();
  return feed;
}

Feed Service::compute_candidate_feed(const CandidateProfile& candidate) const {
  const auto jobs = open_jobs();
  auto feed = rank_jobs(candidate, jobs, config_.analyst, today());
  feed.generated_at = clock_();
  return feed;
}

void Service::upsert(EntityKind kind, const std::string& key, const json& data) {
  for (int attempt = 0;; ++attempt) {
    try {
      if (auto existing = store_.find_unique(kind, key)) {
        store_.compare_and_update(kind, existing->id, existing->version, data);
      } else {
        store_.put(kind, data);
      }
      return;
    } catch (const Error& e) {
      const bool raced = e.code() == Errc::version_conflict || e.code() == Errc::duplicate_key;
      if (!raced || attempt >= kHandshakeRetries) throw;
    }
  }
}

void Service::persist_feed(const Feed& feed) {
  json data = feed;
  data["as_of"] = format_date(today());
  upsert(EntityKind::feed, feed_key(feed.side, feed.owner), data);
}

void Service::drop_feed(FeedSide side, const std::string& owner) {
  if (auto existing = store_.find_unique(EntityKind::feed, feed_key(side, owner))) {
    store_.remove(EntityKind::feed, existing->id);
  }
}

Feed Service::current_feed(FeedSide side, const std::string& owner) {
  std::lock_guard lock(catalog_mutex_);
  if (auto existing = store_.find_unique(EntityKind::feed, feed_key(side, owner))) {
    if (existing->data.value("as_of", std::string{}) == format_date(today())) {
      return existing->data.get<Feed>();
    }
  }
  // Ages move with the calendar, so a feed from an earlier day is recomputed.
  Feed feed = side == FeedSide::employer
                  ? compute_job_feed(store_.get(EntityKind::job, owner).data.get<JobListing>())
                  : compute_candidate_feed(
                        store_.get(EntityKind::candidate, owner).data.get<CandidateProfile>());
  persist_feed(feed);
  return feed;
}

void Service::refresh_after_candidate_change(const CandidateProfile& candidate) {
  persist_feed(compute_candidate_feed(candidate));
  for (const auto& job : open_jobs()) persist_feed(compute_job_feed(job));
}

void Service::refresh_after_job_change(const JobListing& job) {
  if (job.status == JobStatus::open) {
    persist_feed(compute_job_feed(job));
  } else {
    drop_feed(FeedSide::employer, job.job_id.value);
  }
  for (const auto& c : candidates_sharing_skills(job)) {
    if (passes_prefilter(job, c)) persist_feed(compute_candidate_feed(c));
  }
}

void Service::sync_bank() {
  for (const auto& q : bank_.questions) {
    const json data = q;
    if (auto existing = store_.find(EntityKind::personality_question, q.question_id.value)) {
      if (existing->data != data) {
        store_.compare_and_update(EntityKind::personality_question, existing->id,
                                  existing->version, data);
      }
    } else {
      store_.put(EntityKind::personality_question, data, q.question_id.value);
    }
  }
}

bool Service::contact_unlocked(const std::string& employer_id,
                               const std::string& candidate_id) const {
  for (const auto& r : store_.list_by(EntityKind::shortlist, "candidate_id", candidate_id)) {
    if (r.data.at("contact_accepted").is_null()) continue;
    const auto job = store_.find(EntityKind::job, r.data.at("job_id").get<std::string>());
    if (job && job->data.at("employer_id").get<std::string>() == employer_id) return true;
  }
  return false;
}

json Service::feed_page(const Feed& feed, const Context& ctx, const Principal* viewer) const {
  const int limit = ctx.page_param("limit", kDefaultPageLimit, kMaxPageLimit, 1);
  const int offset = ctx.page_param("offset", 0, 1 << 30);
  json entries = json::array();
  const auto begin = std::min<std::size_t>(static_cast<std::size_t>(offset), feed.entries.size());
  const auto end = std::min<std::size_t>(begin + static_cast<std::size_t>(limit), feed.entries.size());
  for (auto i = begin; i < end; ++i) {
    const auto& m = feed.entries[i];
    json e = m;
    e["rank"] = i + 1;
    if (feed.side == FeedSide::employer) {
      if (auto c = store_.find(EntityKind::candidate, m.candidate_id.value)) {
        const bool unlocked =
            viewer && contact_unlocked(viewer->subject_id, m.candidate_id.value);
        e["candidate"] = unlocked ? c->data : redacted(c->data);
      }
    } else if (auto j = store_.find(EntityKind::job, m.job_id.value)) {
      e["job"] = j->data;
      if (auto emp = store_.find(EntityKind::employer, j->data.at("employer_id").get<std::string>())) {
        e["employer_name"] = emp->data.at("business_name");
      }
    }
    entries.push_back(std::move(e));
  }
  return json{{"side", to_string(feed.side)},
              {"owner", feed.owner},
              {"generated_at", format_timestamp(feed.generated_at)},
              {"total", feed.entries.size()},
              {"limit", limit},
              {"offset", offset},
              {"entries", std::move(entries)}};
}

// ---------------------------------------------------------------------------
// catalog and stats

Response Service::health(const Context&) { return {200, json{{"status", "ok"}}}; }

Response Service::get_quiz(const Context&) { return {200, bank_to_json(bank_)}; }

Response Service::list_skills(const Context&) {
  json out = json::array();
  for (const auto& r : store_.list(EntityKind::skill)) out.push_back(r.data);
  return {200, json{{"skills", out}}};
}

Response Service::create_skill(const Context& ctx) {
  auto skill = decode<Skill>(ctx.body(), "skill");
  if (auto report = validate_skill(skill); !report.ok()) fail_validation("invalid skill", report);
  const auto rec = store_.put(EntityKind::skill, json(skill));
  return {201, rec.data};
}

Response Service::skill_demand(const Context&) {
  std::map<std::string, int> counts;
  for (const auto& job : open_jobs()) {
    for (const auto& s : job.required_skills) ++counts[s.value];
  }
  json out = json::array();
  for (const auto& r : store_.list(EntityKind::skill)) {
    out.push_back({{"skill_id", r.id},
                   {"name", r.data.at("name")},
                   {"open_job_count", counts.contains(r.id) ? counts[r.id] : 0}});
  }
  return {200, json{{"skills", out}}};
}

// ---------------------------------------------------------------------------
// candidates

Response Service::register_candidate(const Context& ctx) {
  auto profile = decode<CandidateProfile>(ctx.body(), "candidate");
  profile.candidate_id = {};
  profile.personality.reset();  // only the quiz stamps a personality code
  std::lock_guard lock(catalog_mutex_);
  if (auto report = validate_candidate(profile, catalog(), today()); !report.ok()) {
    fail_validation("invalid candidate", report);
  }
  const auto rec = store_.put(EntityKind::candidate, json(profile));
  profile = rec.data.get<CandidateProfile>();
  auto token = issue_token(Party::candidate, rec.id, "");
  refresh_after_candidate_change(profile);
  return {201, json{{"candidate", rec.data}, {"token", token}}};
}

Response Service::get_candidate(const Context& ctx) {
  const auto& id = ctx.param("cid");
  const auto& who = ctx.who();
  const auto rec = store_.get(EntityKind::candidate, id);
  if (who.party == Party::candidate && who.subject_id == id) return {200, rec.data};
  if (who.party == Party::employer) {
    return {200, contact_unlocked(who.subject_id, id) ? rec.data : redacted(rec.data)};
  }
  fail(403, "unauthorized", "candidates may only view their own profile");
}

Response Service::update_candidate(const Context& ctx) {
  const auto& id = ctx.param("cid");
  auto incoming = decode<CandidateProfile>(ctx.body(), "candidate");
  std::lock_guard lock(catalog_mutex_);
  const auto rec = store_.get(EntityKind::candidate, id);
  ctx.candidate(id);
  const auto current = rec.data.get<CandidateProfile>();
  incoming.candidate_id = current.candidate_id;
  incoming.personality = current.personality;
  if (auto report = validate_candidate(incoming, catalog(), today()); !report.ok()) {
    fail_validation("invalid candidate", report);
  }
  const auto updated =
      store_.compare_and_update(EntityKind::candidate, id, rec.version, json(incoming));
  refresh_after_candidate_change(incoming);
  return {200, updated.data};
}

Response Service::submit_quiz(const Context& ctx) {
  const auto& id = ctx.param("cid");
  const auto body = ctx.body();
  std::lock_guard lock(catalog_mutex_);
  const auto rec = store_.get(EntityKind::candidate, id);
  ctx.candidate(id);
  if (!body.contains("answers") || !body.at("answers").is_object()) {
    fail(400, "validation_failed", "body must carry an \"answers\" object");
  }
  QuizResponseSet responses;
  responses.candidate_id = CandidateId{id};
  for (const auto& [qid, choice] : body.at("answers").items()) {
    if (!choice.is_string()) fail(400, "validation_failed", "answer for " + qid + " must be \"a\" or \"b\"");
    responses.answers.emplace(QuestionId{qid}, parse_choice(choice.get<std::string>()));
  }
  PersonalityResult result;
  try {
    result = score_quiz(bank_, responses, clock_());
  } catch (const Error& e) {
    if (e.code() == Errc::incomplete_response) {
      fail(400, "validation_failed", "incomplete responses",
           json::array({{{"rule", "incomplete responses"}, {"detail", e.what()}}}));
    }
    if (e.code() == Errc::unknown_question) {
      fail(400, "validation_failed", "unknown question",
           json::array({{{"rule", "unknown question"}, {"detail", e.what()}}}));
    }
    throw;
  }
  // Retaking replaces the previous answers and result.
  upsert(EntityKind::personality_answer, id, json(responses));
  upsert(EntityKind::personality_result, id, json(result));
  auto profile = rec.data.get<CandidateProfile>();
  profile.personality = result.code;
  store_.compare_and_update(EntityKind::candidate, id, rec.version, json(profile));
  refresh_after_candidate_change(profile);
  return {201, json(result)};
}

Response Service::get_personality(const Context& ctx) {
  const auto& id = ctx.param("cid");
  const auto& who = ctx.who();
  if (who.party == Party::candidate && who.subject_id != id) {
    fail(403, "unauthorized", "candidates may only view their own result");
  }
  store_.get(EntityKind::candidate, id);
  const auto rec = store_.find_unique(EntityKind::personality_result, id);
  if (!rec) fail(404, "not_found", "candidate " + id + " has not taken the quiz");
  return {200, rec->data};
}

Response Service::candidate_feed(const Context& ctx) {
  const auto& id = ctx.param("cid");
  store_.get(EntityKind::candidate, id);
  ctx.candidate(id);
  return {200, feed_page(current_feed(FeedSide::candidate, id), ctx, nullptr)};
}

Response Service::candidate_applications(const Context& ctx) {
  const auto& id = ctx.param("cid");
  store_.get(EntityKind::candidate, id);
  ctx.candidate(id);
  json out = json::array();
  for (const auto& r : store_.list_by(EntityKind::shortlist, "candidate_id", id)) {
    out.push_back(status_json(r.data.get<ShortlistRecord>()));
  }
  return {200, json{{"applications", out}}};
}

// ---------------------------------------------------------------------------
// employers

Response Service::register_employer(const Context& ctx) {
  const auto body = ctx.body();
  auto employer = decode<EmployerProfile>(body, "employer");
  employer.employer_id = {};
  employer.hr_contacts.clear();
  if (!body.contains("contact")) fail(400, "validation_failed", "an initial HR \"contact\" is required");
  auto contact = decode<HRContact>(body.at("contact"), "contact");
  employer.hr_contacts.push_back(contact);
  if (auto report = validate_employer(employer); !report.ok()) {
    fail_validation("invalid employer", report);
  }
  std::lock_guard lock(catalog_mutex_);
  auto rec = store_.put(EntityKind::employer, json(employer));
  employer = rec.data.get<EmployerProfile>();
  employer.hr_contacts[0].contact_id = ContactId{rec.id + "-c1"};
  rec = store_.compare_and_update(EntityKind::employer, rec.id, rec.version, json(employer));
  auto token = issue_token(Party::employer, rec.id, employer.hr_contacts[0].contact_id.value);
  return {201, json{{"employer", rec.data}, {"contact", employer.hr_contacts[0]}, {"token", token}}};
}

Response Service::get_employer(const Context& ctx) {
  const auto& id = ctx.param("eid");
  const auto& who = ctx.who();
  const auto rec = store_.get(EntityKind::employer, id);
  if (who.party == Party::employer && who.subject_id == id) return {200, rec.data};
  auto employer = rec.data.get<EmployerProfile>();
  const bool unlocked = who.party == Party::candidate && contact_unlocked(id, who.subject_id);
  json out = rec.data;
  if (!unlocked) {
    out["hr_contacts"] = json::array();
    for (const auto& c : employer.hr_contacts) out["hr_contacts"].push_back(contact_public(c));
  }
  return {200, out};
}

Response Service::update_employer(const Context& ctx) {
  const auto& id = ctx.param("eid");
  const auto body = ctx.body();
  std::lock_guard lock(catalog_mutex_);
  const auto rec = store_.get(EntityKind::employer, id);
  ctx.employer(id);
  auto employer = rec.data.get<EmployerProfile>();
  if (body.contains("business_name")) {
    employer.business_name = decode<std::string>(body.at("business_name"), "business_name");
  }
  if (body.contains("logo_ref")) {
    employer.logo_ref = body.at("logo_ref").is_null()
                            ? std::nullopt
                            : std::optional(decode<std::string>(body.at("logo_ref"), "logo_ref"));
  }
  if (auto report = validate_employer(employer); !report.ok()) {
    fail_validation("invalid employer", report);
  }
  const auto updated = store_.compare_and_update(EntityKind::employer, id, rec.version, json(employer));
  return {200, updated.data};
}

Response Service::register_contact(const Context& ctx) {
  const auto& id = ctx.param("eid");
  auto contact = decode<HRContact>(ctx.body(), "contact");
  std::lock_guard lock(catalog_mutex_);
  const auto rec = store_.get(EntityKind::employer, id);
  ctx.employer(id);
  if (auto report = validate_contact(contact); !report.ok()) fail_validation("invalid contact", report);
  auto employer = rec.data.get<EmployerProfile>();
  contact.contact_id = ContactId{id + "-c" + std::to_string(employer.hr_contacts.size() + 1)};
  employer.hr_contacts.push_back(contact);
  store_.compare_and_update(EntityKind::employer, id, rec.version, json(employer));
  auto token = issue_token(Party::employer, id, contact.contact_id.value);
  return {201, json{{"contact", contact}, {"token", token}}};
}

Response Service::employer_jobs(const Context& ctx) {
  const auto& id = ctx.param("eid");
  ctx.who();
  store_.get(EntityKind::employer, id);
  json out = json::array();
  for (const auto& r : store_.list_by(EntityKind::job, "employer_id", id)) out.push_back(r.data);
  return {200, json{{"jobs", out}}};
}

// ---------------------------------------------------------------------------
// jobs

Response Service::post_job(const Context& ctx) {
  const auto& who = ctx.who();
  if (who.party != Party::employer) fail(403, "unauthorized", "only employers may list jobs");
  auto job = decode<JobListing>(ctx.body(), "job");
  if (job.employer_id.empty()) job.employer_id = EmployerId{who.subject_id};
  ctx.employer(job.employer_id.value);
  job.job_id = {};
  job.status = JobStatus::open;
  std::lock_guard lock(catalog_mutex_);
  store_.get(EntityKind::employer, job.employer_id.value);
  if (auto report = validate_job(job, catalog()); !report.ok()) fail_validation("invalid job", report);
  const auto rec = store_.put(EntityKind::job, json(job));
  job = rec.data.get<JobListing>();
  // Listing a job triggers the analyst synchronously.
  const auto feed = compute_job_feed(job);
  persist_feed(feed);
  for (const auto& c : candidates_sharing_skills(job)) {
    if (passes_prefilter(job, c)) persist_feed(compute_candidate_feed(c));
  }
  return {201, json{{"job", rec.data}, {"feed", feed_page(feed, ctx, &who)}}};
}

Response Service::get_job(const Context& ctx) {
  ctx.who();
  return {200, store_.get(EntityKind::job, ctx.param("jid")).data};
}

Response Service::close_job(const Context& ctx) {
  const auto& id = ctx.param("jid");
  std::lock_guard lock(catalog_mutex_);
  const auto rec = store_.get(EntityKind::job, id);
  auto job = rec.data.get<JobListing>();
  ctx.employer(job.employer_id.value);
  if (job.status == JobStatus::closed) fail(422, "precondition_failed", "job " + id + " is already closed");
  job.status = JobStatus::closed;
  const auto updated = store_.compare_and_update(EntityKind::job, id, rec.version, json(job));
  refresh_after_job_change(job);
  return {200, updated.data};
}

Response Service::job_feed(const Context& ctx) {
  const auto& id = ctx.param("jid");
  const auto job = store_.get(EntityKind::job, id).data.get<JobListing>();
  const auto& who = ctx.employer(job.employer_id.value);
  if (job.status != JobStatus::open) fail(422, "precondition_failed", "job " + id + " is closed");
  return {200, feed_page(current_feed(FeedSide::employer, id), ctx, &who)};
}

// ---------------------------------------------------------------------------
// handshake and chat

json Service::status_json(const ShortlistRecord& r) const {
  json j = r;
  j["stage"] = r.stage();
  j["description"] = stage_description(r);
  j["messaging_enabled"] = messaging_enabled(r);
  return j;
}

void Service::notify(Party recipient, const ShortlistRecord& pair, NotificationKind kind) {
  std::string recipient_id = pair.candidate_id.value;
  if (recipient == Party::employer) {
    recipient_id = store_.get(EntityKind::job, pair.job_id.value).data.at("employer_id").get<std::string>();
  }
  store_.put(EntityKind::notification, json{{"recipient_party", to_string(recipient)},
                                            {"recipient_id", recipient_id},
                                            {"kind", to_string(kind)},
                                            {"job_id", pair.job_id},
                                            {"candidate_id", pair.candidate_id},
                                            {"created_at", format_timestamp(clock_())},
                                            {"read", false}});
}

ShortlistRecord Service::handshake(const Context& ctx, EventType type,
                                   std::optional<NotificationKind> kind) {
  const auto& job_id = ctx.param("jid");
  const auto& candidate_id = ctx.param("cid");
  const auto& who = ctx.who();
  const auto job = store_.get(EntityKind::job, job_id).data.get<JobListing>();
  store_.get(EntityKind::candidate, candidate_id);
  const bool is_party = (who.party == Party::employer && who.subject_id == job.employer_id.value) ||
                        (who.party == Party::candidate && who.subject_id == candidate_id);
  if (!is_party) fail(403, "unauthorized", "not a party to this pair");
  if (job.status != JobStatus::open) fail(422, "precondition_failed", "job " + job_id + " is closed");

  const ShortlistEvent event{type, who.party, clock_()};
  const auto key = pair_key(job_id, candidate_id);
  for (int attempt = 0;; ++attempt) {
    try {
      ShortlistRecord next;
      if (auto existing = store_.find_unique(EntityKind::shortlist, key)) {
        next = apply_event(existing->data.get<ShortlistRecord>(), event);
        store_.compare_and_update(EntityKind::shortlist, existing->id, existing->version, json(next));
      } else {
        ShortlistRecord fresh;
        fresh.job_id = JobId{job_id};
        fresh.candidate_id = CandidateId{candidate_id};
        next = apply_event(fresh, event);
        store_.put(EntityKind::shortlist, json(next));
      }
      if (kind) notify(opposite(who.party), next, *kind);
      return next;
    } catch (const Error& e) {
      const bool raced = e.code() == Errc::version_conflict || e.code() == Errc::duplicate_key;
      if (!raced) throw;
      if (attempt >= kHandshakeRetries) {
        fail(409, "conflict", "concurrent update on pair " + job_id + "/" + candidate_id);
      }
    }
  }
}

Response Service::pair_status(const Context& ctx) {
  const auto& job_id = ctx.param("jid");
  const auto& candidate_id = ctx.param("cid");
  const auto& who = ctx.who();
  const auto job = store_.get(EntityKind::job, job_id).data.get<JobListing>();
  store_.get(EntityKind::candidate, candidate_id);
  const bool is_party = (who.party == Party::employer && who.subject_id == job.employer_id.value) ||
                        (who.party == Party::candidate && who.subject_id == candidate_id);
  if (!is_party) fail(403, "unauthorized", "not a party to this pair");
  ShortlistRecord record;
  record.job_id = JobId{job_id};
  record.candidate_id = CandidateId{candidate_id};
  if (auto existing = store_.find_unique(EntityKind::shortlist, pair_key(job_id, candidate_id))) {
    record = existing->data.get<ShortlistRecord>();
  }
  return {200, status_json(record)};
}

Response Service::employer_shortlist(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::employer_shortlists, NotificationKind::shortlisted))};
}

Response Service::candidate_shortlist(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::candidate_shortlists, NotificationKind::shortlisted))};
}

Response Service::initiate_contact(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::employer_initiates_contact,
                                     NotificationKind::contact_requested))};
}

Response Service::accept_contact(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::candidate_accepts_contact,
                                     NotificationKind::contact_accepted))};
}

Response Service::request_video(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::video_requested, NotificationKind::video_requested))};
}

Response Service::accept_video(const Context& ctx) {
  return {200, status_json(handshake(ctx, EventType::video_accepted, NotificationKind::video_accepted))};
}

Response Service::send_chat_message(const Context& ctx) {
  const auto& job_id = ctx.param("jid");
  const auto& candidate_id = ctx.param("cid");
  const auto& who = ctx.who();
  const auto body = ctx.body();
  if (!body.contains("body") || !body.at("body").is_string()) {
    fail(400, "validation_failed", "message needs a string \"body\"");
  }
  const auto job = store_.get(EntityKind::job, job_id).data.get<JobListing>();
  store_.get(EntityKind::candidate, candidate_id);
  const bool is_party = (who.party == Party::employer && who.subject_id == job.employer_id.value) ||
                        (who.party == Party::candidate && who.subject_id == candidate_id);
  if (!is_party) fail(403, "unauthorized", "not a party to this pair");
  if (job.status != JobStatus::open) fail(422, "precondition_failed", "job " + job_id + " is closed");

  const auto key = pair_key(job_id, candidate_id);
  for (int attempt = 0;; ++attempt) {
    const auto existing = store_.find_unique(EntityKind::shortlist, key);
    if (!existing) {
      fail(422, "precondition_failed", "messaging requires all four handshake stages (0/4)");
    }
    try {
      auto sent = send_message(existing->data.get<ShortlistRecord>(), who.party,
                               body.at("body").get<std::string>(), clock_());
      store_.compare_and_update(EntityKind::shortlist, existing->id, existing->version,
                                json(sent.record));
      const auto rec = store_.put(EntityKind::message, json(sent.message));
      notify(opposite(who.party), sent.record, NotificationKind::message_received);
      return {201, rec.data};
    } catch (const Error& e) {
      if (e.code() != Errc::version_conflict) throw;
      if (attempt >= kHandshakeRetries) {
        fail(409, "conflict", "concurrent update on pair " + job_id + "/" + candidate_id);
      }
    }
  }
}

Response Service::list_messages(const Context& ctx) {
  const auto& job_id = ctx.param("jid");
  const auto& candidate_id = ctx.param("cid");
  const auto& who = ctx.who();
  const auto job = store_.get(EntityKind::job, job_id).data.get<JobListing>();
  const bool is_party = (who.party == Party::employer && who.subject_id == job.employer_id.value) ||
                        (who.party == Party::candidate && who.subject_id == candidate_id);
  if (!is_party) fail(403, "unauthorized", "not a party to this pair");
  const int limit = ctx.page_param("limit", kDefaultPageLimit, kMaxPageLimit, 1);
  const int offset = ctx.page_param("offset", 0, 1 << 30);
  std::vector<json> messages;
  for (const auto& r : store_.list_by(EntityKind::message, "candidate_id", candidate_id)) {
    if (r.data.at("job_id") == job_id) messages.push_back(r.data);
  }
  std::sort(messages.begin(), messages.end(), [](const json& a, const json& b) {
    return a.at("position").get<std::uint64_t>() < b.at("position").get<std::uint64_t>();
  });
  json page = json::array();
  for (std::size_t i = static_cast<std::size_t>(offset);
       i < messages.size() && page.size() < static_cast<std::size_t>(limit); ++i) {
    page.push_back(messages[i]);
  }
  return {200, json{{"total", messages.size()}, {"limit", limit}, {"offset", offset}, {"messages", page}}};
}

// ---------------------------------------------------------------------------
// notifications

Response Service::list_notifications(const Context& ctx) {
  const auto& who = ctx.who();
  const bool unread_only = ctx.request.query.contains("unread") && ctx.request.query.at("unread") == "true";
  const int limit = ctx.page_param("limit", kDefaultPageLimit, kMaxPageLimit, 1);
  const int offset = ctx.page_param("offset", 0, 1 << 30);
  std::vector<Record> mine;
  for (auto& r : store_.list_by(EntityKind::notification, "recipient_id", who.subject_id)) {
    if (r.data.at("recipient_party") != to_string(who.party)) continue;
    if (unread_only && r.data.at("read").get<bool>()) continue;
    mine.push_back(std::move(r));
  }
  std::size_t unread = 0;
  for (const auto& r : mine) unread += r.data.at("read").get<bool>() ? 0 : 1;
  json page = json::array();
  for (std::size_t i = static_cast<std::size_t>(offset);
       i < mine.size() && page.size() < static_cast<std::size_t>(limit); ++i) {
    json n = mine[i].data;
    n["notification_id"] = mine[i].id;
    page.push_back(std::move(n));
  }
  return {200, json{{"total", mine.size()}, {"unread", unread}, {"limit", limit},
                    {"offset", offset}, {"notifications", page}}};
}

Response Service::mark_notification_read(const Context& ctx) {
  const auto& who = ctx.who();
  const auto& id = ctx.param("nid");
  for (int attempt = 0;; ++attempt) {
    const auto rec = store_.get(EntityKind::notification, id);
    if (rec.data.at("recipient_id") != who.subject_id ||
        rec.data.at("recipient_party") != to_string(who.party)) {
      fail(403, "unauthorized", "not your notification");
    }
    json data = rec.data;
    data["read"] = true;
    try {
      auto updated = store_.compare_and_update(EntityKind::notification, id, rec.version, data);
      updated.data["notification_id"] = id;
      return {200, updated.data};
    } catch (const Error& e) {
      if (e.code() != Errc::version_conflict || attempt >= kHandshakeRetries) throw;
    }
  }
}

}  // namespace pa::api
