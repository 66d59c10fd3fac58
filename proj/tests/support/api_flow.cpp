#include "api_flow.hpp"

#include <cmath>

#include "fixtures.hpp"

namespace pa::test {
namespace {

using nlohmann::json;

struct Step {
  const Transport& send;
  std::string failure;

  json call(const char* method, const std::string& path, int want, const json& body = nullptr,
            const std::string& token = {}) {
    if (!failure.empty()) return nullptr;
    const auto r = send(make_request(method, path, body, token));
    if (r.status != want) {
      failure = std::string(method) + " " + path + ": status " + std::to_string(r.status) +
                " (wanted " + std::to_string(want) + ") " + r.body.dump();
      return nullptr;
    }
    return r.body;
  }

  void check(bool ok, const std::string& what) {
    if (failure.empty() && !ok) failure = what;
  }
};

}  // namespace

api::Request make_request(std::string method, std::string path, const json& body,
                          const std::string& token) {
  api::Request r;
  r.method = std::move(method);
  if (const auto q = path.find('?'); q != std::string::npos) {
    std::string query = path.substr(q + 1);
    path.resize(q);
    std::size_t start = 0;
    while (start <= query.size()) {
      const auto amp = std::min(query.find('&', start), query.size());
      const auto part = query.substr(start, amp - start);
      if (const auto eq = part.find('='); eq != std::string::npos) {
        r.query[part.substr(0, eq)] = part.substr(eq + 1);
      }
      start = amp + 1;
    }
  }
  r.path = std::move(path);
  if (!body.is_null()) r.body = body.dump();
  if (!token.empty()) r.authorization = "Bearer " + token;
  return r;
}

FlowResult run_example_flow(const Transport& send, Date today) {
  FlowResult out;
  Step s{send, {}};

  std::vector<std::string> skills;
  for (const char* name : {"knife work", "food safety", "plating", "pastry", "bookkeeping"}) {
    const auto r = s.call("POST", "/api/skills", 201, json{{"name", name}, {"category", "kitchen"}});
    if (!r.is_null()) skills.push_back(r.at("skill_id").get<std::string>());
  }
  if (!s.failure.empty()) return out.failure = s.failure, out;

  const Date dob{today.year() - std::chrono::years{31}, std::chrono::January, std::chrono::day{1}};
  const int age = age_of(dob, today);
  json candidate{{"first_name", "Ana"},
                 {"last_name", "Ruiz"},
                 {"email", "ana.ruiz@example.com"},
                 {"date_of_birth", format_date(dob)},
                 {"gender", "female"},
                 {"location", {{"country", "Australia"}, {"region", "NSW"}, {"city", "Sydney"}}},
                 {"salary_min", 50000},
                 {"salary_max", 55000},
                 {"salary_open", false},
                 {"employment_type", "full_time"},
                 {"skills", {skills[0], skills[1], skills[2], skills[4]}},
                 {"employment_history", json::array()}};
  auto reg = s.call("POST", "/api/candidates", 201, candidate);
  if (!s.failure.empty()) return out.failure = s.failure, out;
  out.candidate_id = reg.at("candidate").at("candidate_id").get<std::string>();
  out.candidate_token = reg.at("token").get<std::string>();

  const auto quiz = s.call("GET", "/api/quiz", 200);
  s.check(!quiz.is_null() && quiz.at("questions").size() == 25, "quiz bank not served");
  const auto& bank = default_bank();
  const auto result = s.call("POST", "/api/candidates/" + out.candidate_id + "/quiz", 201,
                             json{{"answers", answers_json(bank, PersonalityCode::parse("RETCS"))}},
                             out.candidate_token);
  s.check(!result.is_null() && result.value("code", "") == "RETCS", "quiz did not yield RETCS");

  auto emp = s.call("POST", "/api/employers", 201,
                    json{{"business_name", "Harbour Kitchen"},
                         {"contact", {{"name", "Jo Park"}, {"phone", "+61 2 5550 0101"},
                                      {"email", "jo@harbour.example"}}}});
  if (!s.failure.empty()) return out.failure = s.failure, out;
  out.employer_id = emp.at("employer").at("employer_id").get<std::string>();
  out.employer_token = emp.at("token").get<std::string>();

  json job{{"title", "line cook"},
           {"summary", "busy harbour-side kitchen"},
           {"location", {{"country", "australia"}, {"region", "nsw"}, {"city", "sydney"}}},
           {"offered_salary", 60000},
           {"employment_type", "full_time"},
           {"required_skills", {skills[0], skills[1], skills[2], skills[3]}},
           {"ideal_personality", "OETCS"},
           {"ideal_age", age},
           {"ideal_gender", "female"}};
  const auto posted = s.call("POST", "/api/jobs", 201, job, out.employer_token);
  if (!s.failure.empty()) return out.failure = s.failure, out;
  out.job_id = posted.at("job").at("job_id").get<std::string>();

  const auto feed = s.call("GET", "/api/jobs/" + out.job_id + "/feed", 200, nullptr, out.employer_token);
  if (!s.failure.empty()) return out.failure = s.failure, out;
  for (const auto& e : feed.at("entries")) {
    if (e.at("candidate_id") == out.candidate_id) out.feed_percentage = e.at("percentage").get<double>();
  }
  s.check(std::abs(out.feed_percentage - 86.0) <= 1e-9,
          "feed percentage " + std::to_string(out.feed_percentage) + " != 86.0");

  const std::string pair = "/api/shortlists/" + out.job_id + "/" + out.candidate_id;
  s.call("POST", pair + "/employer-shortlist", 200, nullptr, out.employer_token);
  s.call("POST", pair + "/candidate-shortlist", 200, nullptr, out.candidate_token);
  s.call("POST", pair + "/messages", 422, json{{"body", "too early"}}, out.employer_token);
  s.call("POST", pair + "/contact", 200, nullptr, out.employer_token);
  const auto accepted = s.call("POST", pair + "/contact/accept", 200, nullptr, out.candidate_token);
  s.check(!accepted.is_null() && accepted.at("stage") == 4, "handshake did not reach 4/4");

  s.call("POST", pair + "/messages", 201, json{{"body", "Hello Ana, are you free Tuesday?"}},
         out.employer_token);
  const auto msgs = s.call("GET", pair + "/messages", 200, nullptr, out.candidate_token);
  s.check(!msgs.is_null() && msgs.at("messages").size() == 1 &&
              msgs.at("messages")[0].at("body") == "Hello Ana, are you free Tuesday?",
          "message not delivered");

  out.final_status = s.call("GET", pair, 200, nullptr, out.candidate_token);
  s.check(!out.final_status.is_null() && out.final_status.at("stage") == 4 &&
              out.final_status.at("messaging_enabled") == true &&
              out.final_status.at("description") == "4/4, messaging enabled",
          "status endpoint does not report 4/4");
  out.failure = s.failure;
  return out;
}

std::string verify_flow_effects(const Transport& send, const FlowResult& flow) {
  Step s{send, {}};
  const std::string pair = "/api/shortlists/" + flow.job_id + "/" + flow.candidate_id;
  const auto status = s.call("GET", pair, 200, nullptr, flow.employer_token);
  s.check(!status.is_null() && status.at("stage") == 4, "4/4 status lost");
  const auto msgs = s.call("GET", pair + "/messages", 200, nullptr, flow.employer_token);
  s.check(!msgs.is_null() && msgs.at("messages").size() == 1, "message lost");
  const auto feed = s.call("GET", "/api/jobs/" + flow.job_id + "/feed", 200, nullptr, flow.employer_token);
  bool found = false;
  if (!feed.is_null()) {
    for (const auto& e : feed.at("entries")) {
      found = found || (e.at("candidate_id") == flow.candidate_id &&
                        std::abs(e.at("percentage").get<double>() - 86.0) <= 1e-9);
    }
  }
  s.check(found, "feed entry lost");
  const auto personality = s.call("GET", "/api/candidates/" + flow.candidate_id + "/personality", 200,
                                  nullptr, flow.candidate_token);
  s.check(!personality.is_null() && personality.at("code") == "RETCS", "personality lost");
  return s.failure;
}

}  // namespace pa::test
