#pragma once

// The register -> quiz -> post job -> feed -> handshake -> chat scenario, driven through
// any transport that can deliver an api::Request.

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "pa/api.hpp"

namespace pa::test {

using Transport = std::function<api::Response(const api::Request&)>;

api::Request make_request(std::string method, std::string path, const nlohmann::json& body = nullptr,
                          const std::string& token = {});

struct FlowResult {
  std::string failure;  // empty on success
  std::string candidate_id, employer_id, job_id;
  std::string candidate_token, employer_token;
  double feed_percentage = -1.0;
  nlohmann::json final_status;
};

/// `today` is the service's current date; the candidate's age is set to the job's ideal age.
FlowResult run_example_flow(const Transport& send, Date today);

/// Re-reads the flow's effects (feed entry, 4/4 status, message) after a restart.
std::string verify_flow_effects(const Transport& send, const FlowResult& flow);

}  // namespace pa::test
