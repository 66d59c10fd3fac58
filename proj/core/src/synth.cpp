#include "pa/synth.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "pa/domain_json.hpp"
#include "pa/embedded_store.hpp"
#include "pa/error.hpp"
#include "pa/personality.hpp"
#include "pa/rng.hpp"

namespace pa::synth {
namespace {

using nlohmann::json;

struct SkillSeed {
  const char* category;
  const char* name;
};

constexpr std::array<SkillSeed, 60> kSkillSeeds{{
    {"software", "c++"},          {"software", "python"},         {"software", "sql"},
    {"software", "javascript"},   {"software", "cloud infrastructure"},
    {"software", "testing"},      {"software", "data analysis"},  {"software", "networking"},
    {"software", "security"},     {"software", "ui design"},      {"hospitality", "barista"},
    {"hospitality", "food safety"}, {"hospitality", "front of house"},
    {"hospitality", "cash handling"}, {"hospitality", "event coordination"},
    {"retail", "merchandising"},  {"retail", "inventory control"}, {"retail", "customer service"},
    {"retail", "point of sale"},  {"retail", "visual display"},   {"construction", "carpentry"},
    {"construction", "electrical"}, {"construction", "plumbing"}, {"construction", "site safety"},
    {"construction", "machine operation"}, {"construction", "surveying"},
    {"health", "first aid"},      {"health", "patient care"},     {"health", "medical records"},
    {"health", "pharmacy"},       {"education", "lesson planning"}, {"education", "tutoring"},
    {"education", "curriculum design"}, {"education", "classroom management"},
    {"office", "reception"},      {"office", "bookkeeping"},      {"office", "scheduling"},
    {"office", "payroll"},        {"office", "office management"}, {"office", "data entry"},
    {"sales", "negotiation"},     {"sales", "account management"}, {"sales", "lead generation"},
    {"sales", "presentations"},   {"marketing", "copywriting"},   {"marketing", "social media"},
    {"marketing", "seo"},         {"marketing", "market research"}, {"logistics", "forklift"},
    {"logistics", "warehousing"}, {"logistics", "route planning"}, {"logistics", "procurement"},
    {"grounds", "gardening"},     {"grounds", "landscaping"},     {"grounds", "maintenance"},
    {"finance", "auditing"},      {"finance", "tax preparation"}, {"finance", "budgeting"},
    {"legal", "contract review"}, {"legal", "compliance"},
}};

constexpr std::array<const char*, 16> kFirstNames{
    "alex", "bea", "chen", "dana", "eli", "farah", "gus", "hana",
    "ivan", "jo", "kiri", "liam", "mei", "noor", "omar", "priya"};
constexpr std::array<const char*, 16> kLastNames{
    "adams", "brown", "costa", "diaz", "evans", "fischer", "garcia", "huang",
    "ito", "jones", "khan", "lee", "moreau", "nguyen", "okafor", "patel"};
constexpr std::array<const char*, 12> kTitles{
    "software engineer", "barista", "store manager", "site electrician", "nurse",
    "teacher", "receptionist", "account executive", "marketing coordinator",
    "warehouse operator", "groundskeeper", "bookkeeper"};
constexpr std::array<const char*, 10> kBusinessWords{
    "acme", "northwind", "blue harbour", "summit", "redgum", "ironbark", "coastal", "metro",
    "greenfield", "lighthouse"};
constexpr std::array<EmploymentType, 4> kEmploymentTypes{
    EmploymentType::full_time, EmploymentType::part_time, EmploymentType::casual,
    EmploymentType::contract};

template <class T, std::size_t N>
const T& pick(Rng& rng, const std::array<T, N>& items) {
  return items[rng.below(N)];
}

Money round_thousand(Money m) { return (m / 1000) * 1000; }

std::set<SkillId> pick_skills(Rng& rng, const std::vector<SkillId>& catalog, std::int64_t lo,
                              std::int64_t hi) {
  const auto want = static_cast<std::size_t>(rng.between(lo, hi));
  std::set<SkillId> out;
  while (out.size() < want) out.insert(catalog[rng.below(catalog.size())]);
  return out;
}

Date random_birthdate(Rng& rng, Date as_of, int min_age, int max_age) {
  const int age = static_cast<int>(rng.between(min_age, max_age));
  const auto month = static_cast<unsigned>(rng.between(1, 12));
  const auto day = static_cast<unsigned>(rng.between(1, 28));
  // Born one year earlier than `age` implies, so the age is at least min_age on as_of.
  return Date{as_of.year() - std::chrono::years{age + 1}, std::chrono::month{month},
              std::chrono::day{day}};
}

PersonalityCode random_code(Rng& rng) {
  std::array<bool, kAxisCount> first{};
  for (auto& f : first) f = rng.chance(0.5);
  return PersonalityCode::from_poles(first);
}

std::string pad(std::string s, std::size_t width, bool right = false) {
  if (s.size() >= width) return s;
  return right ? std::string(width - s.size(), ' ') + s : s + std::string(width - s.size(), ' ');
}

std::string fixed(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::vector<Location> GenConfig::default_locations() {
  return {Location::make("australia", "nsw", "sydney"),
          Location::make("australia", "nsw", "newcastle"),
          Location::make("australia", "vic", "melbourne"),
          Location::make("australia", "vic", "geelong"),
          Location::make("australia", "qld", "brisbane"),
          Location::make("australia", "wa", "perth"),
          Location::make("new zealand", "auckland", "auckland"),
          Location::make("new zealand", "wellington", "wellington"),
          Location::make("united kingdom", "england", "london"),
          Location::make("united kingdom", "scotland", "glasgow"),
          Location::make("australia", "nsw", ""),
          Location::make("new zealand", "", "")};
}

void validate(const GenConfig& c) {
  ValidationReport r;
  if (c.candidate_count <= 0) r.add("candidate_count must be > 0");
  if (c.job_count <= 0) r.add("job_count must be > 0");
  if (c.employer_count <= 0) r.add("employer_count must be > 0");
  if (c.skill_count < 8) r.add("skill_count must be >= 8");
  if (c.salary_floor <= 0 || c.salary_ceiling < c.salary_floor + 20'000) {
    r.add("salary bounds need 0 < floor and ceiling >= floor + 20000");
  }
  if (c.location_pool.empty()) r.add("location pool empty");
  for (const auto& l : c.location_pool) r.merge(l.validate());
  if (!c.as_of.ok()) r.add("as_of invalid");
  if (c.closed_job_fraction < 0.0 || c.closed_job_fraction > 1.0) r.add("closed_job_fraction not in [0,1]");
  if (c.quiz_taken_fraction < 0.0 || c.quiz_taken_fraction > 1.0) r.add("quiz_taken_fraction not in [0,1]");
  if (!r.ok()) throw Error(Errc::invalid_config, "invalid generator config: " + r.summary());
}

StoreSnapshot generate(const GenConfig& config) {
  validate(config);
  Rng rng(config.seed);
  EmbeddedStore store;
  const Timestamp taken_at = std::chrono::sys_days{config.as_of};
  const auto& bank = default_bank();

  std::vector<SkillId> catalog;
  for (std::int64_t i = 0; i < config.skill_count; ++i) {
    Skill s;
    if (static_cast<std::size_t>(i) < kSkillSeeds.size()) {
      s.name = kSkillSeeds[static_cast<std::size_t>(i)].name;
      s.category = kSkillSeeds[static_cast<std::size_t>(i)].category;
    } else {
      s.name = "specialty " + std::to_string(i);
      s.category = "other";
    }
    catalog.emplace_back(store.put(EntityKind::skill, json(s)).id);
  }
  const std::set<SkillId> catalog_set(catalog.begin(), catalog.end());

  for (const auto& q : bank.questions) {
    store.put(EntityKind::personality_question, json(q), q.question_id.value);
  }

  std::vector<EmployerId> employers;
  for (std::int64_t i = 0; i < config.employer_count; ++i) {
    EmployerProfile e;
    e.business_name = std::string(pick(rng, kBusinessWords)) + " " + pick(rng, kTitles) +
                      " co " + std::to_string(i + 1);
    e.hr_contacts.push_back({ContactId{}, std::string(pick(rng, kFirstNames)) + " " + pick(rng, kLastNames),
                             "+61 2 5550 " + std::to_string(1000 + i),
                             "hr" + std::to_string(i + 1) + "@example.com"});
    auto rec = store.put(EntityKind::employer, json(e));
    e = rec.data.get<EmployerProfile>();
    e.hr_contacts[0].contact_id = ContactId{rec.id + "-c1"};
    store.compare_and_update(EntityKind::employer, rec.id, rec.version, json(e));
    employers.emplace_back(rec.id);
  }

  for (std::int64_t i = 0; i < config.job_count; ++i) {
    JobListing j;
    j.employer_id = employers[rng.below(employers.size())];
    j.title = pick(rng, kTitles);
    j.summary = "synthetic listing " + std::to_string(i + 1);
    j.location = config.location_pool[rng.below(config.location_pool.size())];
    j.offered_salary = round_thousand(rng.between(config.salary_floor, config.salary_ceiling));
    j.employment_type = pick(rng, kEmploymentTypes);
    j.required_skills = pick_skills(rng, catalog, 1, 5);
    if (rng.chance(0.6)) j.ideal_personality = random_code(rng);
    if (rng.chance(0.4)) j.ideal_age = static_cast<int>(rng.between(20, 55));
    if (rng.chance(0.3)) {
      j.ideal_gender = std::array{Gender::female, Gender::male, Gender::unspecified}[rng.below(3)];
    }
    j.status = rng.chance(config.closed_job_fraction) ? JobStatus::closed : JobStatus::open;
    if (auto report = validate_job(j, catalog_set); !report.ok()) {
      throw Error(Errc::invalid_config, "generator produced invalid job: " + report.summary());
    }
    store.put(EntityKind::job, json(j));
  }

  for (std::int64_t i = 0; i < config.candidate_count; ++i) {
    CandidateProfile c;
    c.first_name = pick(rng, kFirstNames);
    c.last_name = pick(rng, kLastNames);
    c.email = c.first_name + "." + c.last_name + "." + std::to_string(i + 1) + "@example.com";
    c.date_of_birth = random_birthdate(rng, config.as_of, 18, 64);
    const auto g = rng.below(20);
    c.gender = g < 9 ? Gender::female : g < 18 ? Gender::male : Gender::unspecified;
    c.location = config.location_pool[rng.below(config.location_pool.size())];
    c.salary_min = round_thousand(rng.between(config.salary_floor, config.salary_ceiling - 20'000));
    c.salary_max = c.salary_min + round_thousand(rng.between(0, 40'000));
    c.salary_open = rng.chance(0.15);
    c.employment_type = pick(rng, kEmploymentTypes);
    c.skills = pick_skills(rng, catalog, 2, 8);
    if (rng.chance(0.5)) c.photo_ref = "photos/" + std::to_string(i + 1) + ".jpg";
    const auto rows = rng.between(0, 2);
    for (std::int64_t r = 0; r < rows; ++r) {
      const Date start{config.as_of.year() - std::chrono::years{static_cast<int>(2 * (rows - r) + 1)},
                       std::chrono::month{static_cast<unsigned>(rng.between(1, 12))},
                       std::chrono::day{1}};
      EmploymentRecord h{pick(rng, kTitles), std::string(pick(rng, kBusinessWords)) + " pty ltd",
                         start, std::nullopt};
      if (r + 1 < rows) h.end = Date{start.year() + std::chrono::years{1}, start.month(), start.day()};
      c.employment_history.push_back(h);
    }

    std::optional<QuizResponseSet> answers;
    if (rng.chance(config.quiz_taken_fraction)) {
      answers.emplace();
      for (const auto& q : bank.questions) {
        answers->answers.emplace(q.question_id, rng.chance(0.5) ? QuizChoice::a : QuizChoice::b);
      }
    }
    if (auto report = validate_candidate(c, catalog_set, config.as_of); !report.ok()) {
      throw Error(Errc::invalid_config, "generator produced invalid candidate: " + report.summary());
    }
    auto rec = store.put(EntityKind::candidate, json(c));
    if (answers) {
      answers->candidate_id = CandidateId{rec.id};
      const auto result = score_quiz(bank, *answers, taken_at);
      c = rec.data.get<CandidateProfile>();
      c.personality = result.code;
      store.compare_and_update(EntityKind::candidate, rec.id, rec.version, json(c));
      store.put(EntityKind::personality_answer, json(*answers));
      store.put(EntityKind::personality_result, json(result));
    }
  }
  return export_snapshot(store);
}

Corpus load_corpus(const StoreSnapshot& snapshot) {
  EmbeddedStore store;
  import_snapshot(store, snapshot);
  Corpus corpus;
  for (const auto& r : store.list(EntityKind::candidate)) {
    corpus.candidates.push_back(r.data.get<CandidateProfile>());
  }
  for (const auto& r : store.list(EntityKind::job)) corpus.jobs.push_back(r.data.get<JobListing>());
  return corpus;
}

MatchReport batch_match(const Corpus& corpus, const AnalystOptions& options, Date as_of) {
  if (auto report = validate_weights(options.weights); !report.ok()) {
    throw Error(Errc::invalid_config, "invalid weights: " + report.summary());
  }
  MatchReport out;
  out.as_of = as_of;
  out.weights = options.weights;
  out.candidate_count = corpus.candidates.size();
  for (const auto& job : corpus.jobs) {
    if (job.status != JobStatus::open) continue;
    ++out.open_job_count;
    auto feed = rank_candidates(job, corpus.candidates, options, as_of);
    out.survivor_count += feed.entries.size();
    out.rankings.push_back({job.job_id, job.title, std::move(feed)});
  }
  return out;
}

std::string render_text(const MatchReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rankings) {
    out << "job " << r.job_id.value << "  " << r.title << "  (" << r.feed.entries.size()
        << " candidates)\n";
    out << pad("rank", 5, true) << "  " << pad("candidate", 14) << pad("pct", 9, true);
    for (auto c : kCriteria) out << pad(std::string(to_string(c)).substr(0, 6), 8, true);
    out << '\n';
    std::size_t rank = 0;
    for (const auto& m : r.feed.entries) {
      out << pad(std::to_string(++rank), 5, true) << "  " << pad(m.candidate_id.value, 14)
          << pad(fixed(m.percentage, 4), 9, true);
      for (auto c : kCriteria) {
        const auto& s = m.breakdown[c];
        out << pad(s ? fixed(*s, 3) : std::string("-"), 8, true);
      }
      out << '\n';
    }
    out << '\n';
  }
  out << "summary: as_of=" << format_date(report.as_of) << " candidates=" << report.candidate_count
      << " open_jobs=" << report.open_job_count << " survivors=" << report.survivor_count << '\n';
  return out.str();
}

json report_to_json(const MatchReport& report) {
  json jobs = json::array();
  for (const auto& r : report.rankings) {
    jobs.push_back({{"job_id", r.job_id}, {"title", r.title}, {"feed", r.feed}});
  }
  return json{{"as_of", format_date(report.as_of)},
              {"weights", weights_to_json(report.weights)},
              {"summary",
               {{"candidates", report.candidate_count},
                {"open_jobs", report.open_job_count},
                {"survivors", report.survivor_count}}},
              {"jobs", jobs}};
}

MatchReport report_from_json(const json& doc) {
  MatchReport r;
  r.as_of = parse_date(doc.at("as_of").get<std::string>());
  r.weights = parse_weights(doc.at("weights"));
  r.candidate_count = doc.at("summary").at("candidates").get<std::size_t>();
  r.open_job_count = doc.at("summary").at("open_jobs").get<std::size_t>();
  r.survivor_count = doc.at("summary").at("survivors").get<std::size_t>();
  for (const auto& j : doc.at("jobs")) {
    r.rankings.push_back({JobId{j.at("job_id").get<std::string>()}, j.at("title").get<std::string>(),
                          j.at("feed").get<Feed>()});
  }
  return r;
}

}  // namespace pa::synth
