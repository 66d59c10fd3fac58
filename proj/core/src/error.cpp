#include "pa/error.hpp"

#include <algorithm>

namespace pa {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::validation_failed: return "validation_failed";
    case Errc::not_found: return "not_found";
    case Errc::duplicate_key: return "duplicate_key";
    case Errc::version_conflict: return "version_conflict";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::duplicate_event: return "duplicate_event";
    case Errc::wrong_actor: return "wrong_actor";
    case Errc::incomplete_response: return "incomplete_response";
    case Errc::unknown_question: return "unknown_question";
    case Errc::job_closed: return "job_closed";
    case Errc::messaging_not_enabled: return "messaging_not_enabled";
    case Errc::empty_body: return "empty_body";
    case Errc::digest_mismatch: return "digest_mismatch";
    case Errc::unsupported_schema: return "unsupported_schema";
    case Errc::non_empty_target: return "non_empty_target";
    case Errc::integrity_failure: return "integrity_failure";
    case Errc::invalid_config: return "invalid_config";
    case Errc::unauthorized: return "unauthorized";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

bool ValidationReport::has(std::string_view rule) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

void ValidationReport::add(std::string rule, std::string detail) {
  violations.push_back({std::move(rule), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.rule;
    if (!v.detail.empty()) out += " (" + v.detail + ")";
  }
  return out;
}

}  // namespace pa
