#include <gtest/gtest.h>

#include <fstream>
#include <thread>

#include "fixtures.hpp"
#include "pa/embedded_store.hpp"
#include "pa/error.hpp"

namespace pa {
namespace {

using nlohmann::json;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

TEST(EmbeddedStore, AssignsSequentialIdsAndMirrorsIdField) {
  EmbeddedStore s;
  const auto a = s.put(EntityKind::candidate, json{{"first_name", "a"}});
  const auto b = s.put(EntityKind::candidate, json{{"first_name", "b"}});
  EXPECT_EQ(a.id, "cand-00000001");
  EXPECT_EQ(b.id, "cand-00000002");
  EXPECT_EQ(a.version, 1u);
  EXPECT_EQ(a.data.at("candidate_id"), a.id);
  EXPECT_EQ(s.get(EntityKind::candidate, a.id), a);
  EXPECT_EQ(s.size(), 2u);
}

TEST(EmbeddedStore, ExplicitIdsAdvanceCounter) {
  EmbeddedStore s;
  s.put(EntityKind::job, json::object(), "job-00000007");
  EXPECT_EQ(s.put(EntityKind::job, json::object()).id, "job-00000008");
  EXPECT_EQ(code_of([&] { s.put(EntityKind::job, json::object(), "job-00000007"); }), Errc::duplicate_key);
}

TEST(EmbeddedStore, UniqueKeys) {
  EmbeddedStore s;
  s.put(EntityKind::employer, json{{"business_name", "Acme"}});
  EXPECT_EQ(code_of([&] { s.put(EntityKind::employer, json{{"business_name", " ACME "}}); }),
            Errc::duplicate_key);
  s.put(EntityKind::skill, json{{"name", "sql"}, {"category", "it"}});
  s.put(EntityKind::skill, json{{"name", "sql"}, {"category", "finance"}});
  EXPECT_EQ(code_of([&] { s.put(EntityKind::skill, json{{"name", "sql"}, {"category", "it"}}); }),
            Errc::duplicate_key);
  const auto found = s.find_unique(EntityKind::employer, "acme");
  ASSERT_TRUE(found);
  EXPECT_EQ(found->data.at("business_name"), "Acme");
}

TEST(EmbeddedStore, UpdateMovingUniqueKey) {
  EmbeddedStore s;
  const auto a = s.put(EntityKind::employer, json{{"business_name", "A"}});
  s.put(EntityKind::employer, json{{"business_name", "B"}});
  EXPECT_EQ(code_of([&] {
              s.compare_and_update(EntityKind::employer, a.id, 1, json{{"business_name", "b"}});
            }),
            Errc::duplicate_key);
  const auto moved = s.compare_and_update(EntityKind::employer, a.id, 1, json{{"business_name", "C"}});
  EXPECT_EQ(moved.version, 2u);
  EXPECT_FALSE(s.find_unique(EntityKind::employer, "a"));
  EXPECT_TRUE(s.find_unique(EntityKind::employer, "c"));
}

TEST(EmbeddedStore, CompareAndUpdateVersions) {
  EmbeddedStore s;
  const auto r = s.put(EntityKind::shortlist, json{{"job_id", "j"}, {"candidate_id", "c"}, {"n", 0}});
  const auto r2 = s.compare_and_update(EntityKind::shortlist, r.id, 1, json{{"job_id", "j"}, {"candidate_id", "c"}, {"n", 1}});
  EXPECT_EQ(r2.version, 2u);
  EXPECT_EQ(code_of([&] { s.compare_and_update(EntityKind::shortlist, r.id, 1, json::object()); }),
            Errc::version_conflict);
  EXPECT_EQ(code_of([&] { s.compare_and_update(EntityKind::shortlist, "nope", 1, json::object()); }),
            Errc::not_found);
}

TEST(EmbeddedStore, ListByMembershipAndEquality) {
  EmbeddedStore s;
  s.put(EntityKind::candidate, json{{"skills", {"s1", "s2"}}, {"city", "x"}});
  s.put(EntityKind::candidate, json{{"skills", {"s2"}}, {"city", "y"}});
  s.put(EntityKind::candidate, json{{"skills", json::array()}, {"city", "x"}});
  EXPECT_EQ(s.list_by(EntityKind::candidate, "skills", "s2").size(), 2u);
  EXPECT_EQ(s.list_by(EntityKind::candidate, "skills", "s1").size(), 1u);
  EXPECT_EQ(s.list_by(EntityKind::candidate, "city", "x").size(), 2u);
  EXPECT_TRUE(s.list_by(EntityKind::candidate, "missing", "x").empty());
}

TEST(EmbeddedStore, RemoveAndClear) {
  EmbeddedStore s;
  const auto r = s.put(EntityKind::employer, json{{"business_name", "A"}});
  s.remove(EntityKind::employer, r.id);
  EXPECT_FALSE(s.find(EntityKind::employer, r.id));
  EXPECT_EQ(code_of([&] { s.remove(EntityKind::employer, r.id); }), Errc::not_found);
  s.put(EntityKind::employer, json{{"business_name", "A"}});  // key released
  s.clear();
  EXPECT_EQ(s.size(), 0u);
}

TEST(EmbeddedStore, DumpOrderAndRestore) {
  EmbeddedStore s;
  s.put(EntityKind::skill, json{{"name", "b"}, {"category", "x"}});
  s.put(EntityKind::candidate, json{{"n", 1}});
  s.put(EntityKind::skill, json{{"name", "a"}, {"category", "x"}});
  const auto dump = s.dump();
  ASSERT_EQ(dump.size(), 3u);
  EXPECT_EQ(dump[0].kind, EntityKind::candidate);
  EXPECT_EQ(dump[1].id, "skill-00000001");
  EXPECT_EQ(dump[2].id, "skill-00000002");
  EXPECT_EQ(code_of([&] { s.restore(dump); }), Errc::non_empty_target);
  EmbeddedStore t;
  t.restore(dump);
  EXPECT_EQ(t.dump(), dump);
  EXPECT_EQ(t.put(EntityKind::skill, json{{"name", "c"}, {"category", "x"}}).id, "skill-00000003");
}

TEST(EmbeddedStore, ConcurrentCasLosesNoUpdates) {
  EmbeddedStore s;
  const auto r = s.put(EntityKind::shortlist, json{{"job_id", "j"}, {"candidate_id", "c"}, {"n", 0}});
  constexpr int kThreads = 8, kEach = 200;
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < kEach; ++i) {
        for (;;) {
          auto cur = s.get(EntityKind::shortlist, r.id);
          cur.data["n"] = cur.data["n"].get<int>() + 1;
          try {
            s.compare_and_update(EntityKind::shortlist, r.id, cur.version, cur.data);
            break;
          } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::version_conflict);
          }
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  const auto final = s.get(EntityKind::shortlist, r.id);
  EXPECT_EQ(final.data["n"], kThreads * kEach);
  EXPECT_EQ(final.version, 1u + kThreads * kEach);
}

TEST(FileStore, SurvivesReopen) {
  test::TempDir dir;
  std::string id;
  {
    auto s = EmbeddedStore::open(dir.path());
    id = s->put(EntityKind::employer, json{{"business_name", "A"}}).id;
    s->compare_and_update(EntityKind::employer, id, 1, json{{"business_name", "A2"}});
    const auto gone = s->put(EntityKind::employer, json{{"business_name", "tmp"}});
    s->remove(EntityKind::employer, gone.id);
  }
  auto s = EmbeddedStore::open(dir.path());
  const auto r = s->get(EntityKind::employer, id);
  EXPECT_EQ(r.version, 2u);
  EXPECT_EQ(r.data.at("business_name"), "A2");
  EXPECT_EQ(s->size(), 1u);
  EXPECT_EQ(s->put(EntityKind::employer, json{{"business_name", "B"}}).id, "emp-00000003");
}

TEST(FileStore, ReplaysJournalWithoutCompaction) {
  test::TempDir dir;
  EmbeddedStore::Options opts;
  opts.compact_on_open = false;
  {
    auto s = EmbeddedStore::open(dir.path(), opts);
    s->put(EntityKind::skill, json{{"name", "a"}, {"category", "x"}});
    s->clear();
    s->put(EntityKind::skill, json{{"name", "b"}, {"category", "x"}});
  }
  auto s = EmbeddedStore::open(dir.path(), opts);
  const auto all = s->list(EntityKind::skill);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].data.at("name"), "b");
}

TEST(FileStore, IgnoresTornTrailingLine) {
  test::TempDir dir;
  {
    auto s = EmbeddedStore::open(dir.path());
    s->put(EntityKind::skill, json{{"name", "a"}, {"category", "x"}});
  }
  {
    std::ofstream j(dir.path() / "journal.ndjson", std::ios::app);
    j << R"({"op":"put","record":{"kind":"Skill","id":"skill-0000)";
  }
  auto s = EmbeddedStore::open(dir.path());
  EXPECT_EQ(s->size(), 1u);
}

}  // namespace
}  // namespace pa
