#include "pa/integrity.hpp"

#include <set>
#include <utility>

namespace pa {
namespace {

using nlohmann::json;

class Checker {
 public:
  explicit Checker(std::span<const Record> records) : records_(records) {
    for (const auto& r : records) ids_.emplace(r.kind, r.id);
  }

  std::vector<DanglingReference> run() {
    for (const auto& r : records_) check(r);
    return std::move(out_);
  }

 private:
  void expect(const Record& r, std::string field, EntityKind target, const json& value) {
    if (!value.is_string()) return;
    const auto id = value.get<std::string>();
    if (!ids_.contains({target, id})) out_.push_back({r.kind, r.id, std::move(field), target, id});
  }

  void expect_field(const Record& r, const char* field, EntityKind target) {
    if (const auto it = r.data.find(field); it != r.data.end()) expect(r, field, target, *it);
  }

  void expect_each(const Record& r, const char* field, EntityKind target) {
    const auto it = r.data.find(field);
    if (it == r.data.end() || !it->is_array()) return;
    for (const auto& v : *it) expect(r, std::string(field) + "[]", target, v);
  }

  void expect_pair(const Record& r) {
    expect_field(r, "job_id", EntityKind::job);
    expect_field(r, "candidate_id", EntityKind::candidate);
  }

  void check(const Record& r) {
    switch (r.kind) {
      case EntityKind::candidate: expect_each(r, "skills", EntityKind::skill); break;
      case EntityKind::job:
        expect_field(r, "employer_id", EntityKind::employer);
        expect_each(r, "required_skills", EntityKind::skill);
        break;
      case EntityKind::personality_result: expect_field(r, "candidate_id", EntityKind::candidate); break;
      case EntityKind::personality_answer:
        expect_field(r, "candidate_id", EntityKind::candidate);
        if (const auto it = r.data.find("answers"); it != r.data.end() && it->is_object()) {
          for (const auto& [qid, _] : it->items()) {
            expect(r, "answers{}", EntityKind::personality_question, qid);
          }
        }
        break;
      case EntityKind::shortlist:
      case EntityKind::message:
      case EntityKind::notification: expect_pair(r); break;
      case EntityKind::credential: {
        const auto party = r.data.value("party", std::string{});
        expect_field(r, "subject_id",
                     party == "candidate" ? EntityKind::candidate : EntityKind::employer);
        break;
      }
      case EntityKind::feed: {
        const bool employer_side = r.data.value("side", std::string{}) == "employer";
        expect_field(r, "owner", employer_side ? EntityKind::job : EntityKind::candidate);
        if (const auto it = r.data.find("entries"); it != r.data.end() && it->is_array()) {
          for (const auto& e : *it) {
            const char* key = employer_side ? "candidate_id" : "job_id";
            if (e.contains(key)) {
              expect(r, std::string("entries[].") + key,
                     employer_side ? EntityKind::candidate : EntityKind::job, e.at(key));
            }
          }
        }
        break;
      }
      case EntityKind::employer:
      case EntityKind::skill:
      case EntityKind::personality_question: break;
    }
  }

  std::span<const Record> records_;
  std::set<std::pair<EntityKind, std::string>> ids_;
  std::vector<DanglingReference> out_;
};

}  // namespace

std::vector<DanglingReference> check_integrity(std::span<const Record> records) {
  return Checker(records).run();
}

std::vector<DanglingReference> check_integrity(const Store& store) {
  const auto records = store.dump();
  return check_integrity(std::span<const Record>(records));
}

std::string describe(const DanglingReference& d) {
  return std::string(to_string(d.kind)) + " " + d.id + "." + d.field + " -> " +
         std::string(to_string(d.target_kind)) + " " + d.target_id;
}

}  // namespace pa
