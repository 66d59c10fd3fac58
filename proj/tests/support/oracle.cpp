#include "oracle.hpp"

#include <cstdlib>
#include <sstream>

namespace pa::oracle {
namespace {

int shared_skills(const JobListing& job, const CandidateProfile& c) {
  int n = 0;
  for (const auto& r : job.required_skills) {
    for (const auto& s : c.skills) {
      if (r.value == s.value) ++n;
    }
  }
  return n;
}

int as_number(Date d) {
  return static_cast<int>(d.year()) * 10000 + static_cast<int>(static_cast<unsigned>(d.month())) * 100 +
         static_cast<int>(static_cast<unsigned>(d.day()));
}

// Completed years, the classic yyyymmdd subtraction.
int years_between(Date birth, Date as_of) { return (as_number(as_of) - as_number(birth)) / 10000; }

double code_agreement(const std::string& a, const std::string& b) {
  int same = 0;
  for (std::size_t i = 0; i < 5; ++i) same += a[i] == b[i] ? 1 : 0;
  return same / 5.0;
}

// Swap-based selection sort: highest percentage first, then smallest id.
void naive_sort(std::vector<Entry>& v, bool by_candidate) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto& a = v[j];
      const auto& b = v[best];
      const auto& ida = by_candidate ? a.candidate_id : a.job_id;
      const auto& idb = by_candidate ? b.candidate_id : b.job_id;
      if (a.percentage > b.percentage || (a.percentage == b.percentage && ida < idb)) best = j;
    }
    std::swap(v[i], v[best]);
  }
}

}  // namespace

bool survives(const JobListing& job, const CandidateProfile& c) {
  if (shared_skills(job, c) == 0) return false;
  return c.salary_open || job.offered_salary >= c.salary_min;
}

Entry score_pair(const JobListing& job, const CandidateProfile& c, const std::array<double, 7>& w,
                 Date as_of, double age_tolerance) {
  Entry e{job.job_id.value, c.candidate_id.value, 0.0, {}};
  auto& s = e.subscores;
  s[0] = shared_skills(job, c) / static_cast<double>(job.required_skills.size());
  if (job.ideal_personality && c.personality) {
    s[1] = code_agreement(c.personality->str(), job.ideal_personality->str());
  }
  if (c.salary_open) {
    s[2] = 1.0;
  } else if (c.salary_max <= c.salary_min) {
    s[2] = job.offered_salary >= c.salary_min ? 1.0 : 0.0;
  } else {
    double x = static_cast<double>(job.offered_salary - c.salary_min) /
               static_cast<double>(c.salary_max - c.salary_min);
    s[2] = x < 0 ? 0.0 : x > 1 ? 1.0 : x;
  }
  const auto& a = job.location;
  const auto& b = c.location;
  if (a.country != b.country) {
    s[3] = 0.0;
  } else if (!a.region.empty() && a.region == b.region && !a.city.empty() && a.city == b.city) {
    s[3] = 1.0;
  } else if (!a.region.empty() && a.region == b.region) {
    s[3] = 0.5;
  } else {
    s[3] = 0.25;
  }
  s[4] = job.employment_type == c.employment_type ? 1.0 : 0.0;
  if (job.ideal_age) {
    const double d = std::abs(years_between(c.date_of_birth, as_of) - *job.ideal_age);
    const double v = 1.0 - d / age_tolerance;
    s[5] = v > 0 ? v : 0.0;
  }
  if (job.ideal_gender && *job.ideal_gender != Gender::unspecified) {
    s[6] = c.gender == *job.ideal_gender ? 1.0 : 0.0;
  }

  double total = 0.0;
  for (std::size_t i = 0; i < 7; ++i) {
    if (s[i]) total += w[i];
  }
  if (total <= 0) return e;
  double pct = 0.0;
  for (std::size_t i = 0; i < 7; ++i) {
    if (s[i]) pct += (w[i] / total) * *s[i];
  }
  pct *= 100.0;
  e.percentage = pct < 0 ? 0 : pct > 100 ? 100 : pct;
  return e;
}

std::vector<Entry> rank_for_job(const JobListing& job, const std::vector<CandidateProfile>& cs,
                                const std::array<double, 7>& w, Date as_of) {
  std::vector<Entry> out;
  for (const auto& c : cs) {
    if (survives(job, c)) out.push_back(score_pair(job, c, w, as_of));
  }
  naive_sort(out, true);
  return out;
}

std::vector<Entry> rank_for_candidate(const CandidateProfile& c, const std::vector<JobListing>& jobs,
                                      const std::array<double, 7>& w, Date as_of) {
  std::vector<Entry> out;
  for (const auto& j : jobs) {
    if (j.status == JobStatus::open && survives(j, c)) out.push_back(score_pair(j, c, w, as_of));
  }
  naive_sort(out, false);
  return out;
}

std::string compare(const Feed& feed, const std::vector<Entry>& expected) {
  std::ostringstream why;
  if (feed.entries.size() != expected.size()) {
    why << "feed " << feed.owner << ": size " << feed.entries.size() << " vs oracle " << expected.size();
    return why.str();
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& got = feed.entries[i];
    const auto& want = expected[i];
    bool same = got.job_id.value == want.job_id && got.candidate_id.value == want.candidate_id &&
                got.percentage == want.percentage;
    for (std::size_t k = 0; k < 7 && same; ++k) same = got.breakdown.subscores[k] == want.subscores[k];
    if (!same) {
      why.precision(17);
      why << "feed " << feed.owner << " position " << i << ": engine (" << got.job_id.value << ", "
          << got.candidate_id.value << ", " << got.percentage << ") vs oracle (" << want.job_id << ", "
          << want.candidate_id << ", " << want.percentage << ")";
      return why.str();
    }
  }
  return {};
}

}  // namespace pa::oracle
