#pragma once

#include <span>
#include <string>
#include <vector>

#include "pa/store.hpp"

namespace pa {

struct DanglingReference {
  EntityKind kind;          // record holding the reference
  std::string id;
  std::string field;        // e.g. "job_id", "skills[]"
  EntityKind target_kind;
  std::string target_id;

  bool operator==(const DanglingReference&) const = default;
};

/// Every reference in the record set that fails to resolve, in record order.
std::vector<DanglingReference> check_integrity(std::span<const Record> records);
std::vector<DanglingReference> check_integrity(const Store& store);

std::string describe(const DanglingReference& d);

}  // namespace pa
