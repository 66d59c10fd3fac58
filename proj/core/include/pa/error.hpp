#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pa {

enum class Errc {
  invalid_argument,
  validation_failed,
  not_found,
  duplicate_key,
  version_conflict,
  precondition_failed,
  duplicate_event,
  wrong_actor,
  incomplete_response,
  unknown_question,
  job_closed,
  messaging_not_enabled,
  empty_body,
  digest_mismatch,
  unsupported_schema,
  non_empty_target,
  integrity_failure,
  invalid_config,
  unauthorized,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every fault raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

struct Violation {
  std::string rule;    // stable name, e.g. "salary range inverted"
  std::string detail;  // human-readable context
};

/// Validation outcomes are data, not faults.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view rule) const noexcept;
  void add(std::string rule, std::string detail = {});
  void merge(const ValidationReport& other);
  std::string summary() const;
};

}  // namespace pa
