#include "reference_fsm.hpp"

#include <array>

namespace pa::reference {
namespace {

// Column order: for each event type, employer actor then candidate actor.
//   ES = employer shortlists, CS = candidate shortlists, IC = employer initiates contact,
//   AC = candidate accepts contact, VR = video requested, VA = video accepted.
// Cells: a state number, or W wrong_actor, D duplicate_event, P precondition_failed.
constexpr int W = -1, D = -2, P = -3;

// clang-format off
constexpr std::array<std::array<int, kEventCount>, kStateCount> kTable{{
  //         ES.e  ES.c  CS.e  CS.c  IC.e  IC.c  AC.e  AC.c  VR.e  VR.c  VA.e  VA.c
  /* 0 */ {{ 1,    W,    W,    2,    P,    W,    W,    P,    P,    P,    P,    P }},
  /* 1 */ {{ D,    W,    W,    3,    P,    W,    W,    P,    P,    P,    P,    P }},
  /* 2 */ {{ 3,    W,    W,    D,    P,    W,    W,    P,    P,    P,    P,    P }},
  /* 3 */ {{ D,    W,    W,    D,    4,    W,    W,    P,    P,    P,    P,    P }},
  /* 4 */ {{ D,    W,    W,    D,    D,    W,    W,    5,    P,    P,    P,    P }},
  /* 5 */ {{ D,    W,    W,    D,    D,    W,    W,    D,    6,    7,    P,    P }},
  /* 6 */ {{ D,    W,    W,    D,    D,    W,    W,    D,    D,    D,    W,    8 }},
  /* 7 */ {{ D,    W,    W,    D,    D,    W,    W,    D,    D,    D,    9,    W }},
  /* 8 */ {{ D,    W,    W,    D,    D,    W,    W,    D,    D,    D,    D,    D }},
  /* 9 */ {{ D,    W,    W,    D,    D,    W,    W,    D,    D,    D,    D,    D }},
}};
// clang-format on

constexpr std::array<EventType, 6> kTypes{
    EventType::employer_shortlists,       EventType::candidate_shortlists,
    EventType::employer_initiates_contact, EventType::candidate_accepts_contact,
    EventType::video_requested,           EventType::video_accepted};

void check_step(const ShortlistRecord& before, int state, int ev, const ShortlistEvent& e,
                ShortlistRecord& after, ExhaustiveResult& out, const std::string& path) {
  const auto want = expected(static_cast<State>(state), ev);
  std::optional<Errc> got_error;
  after = before;
  try {
    after = apply_event(before, e);
  } catch (const Error& err) {
    got_error = err.code();
  }
  const int got_state = classify(after);
  bool ok = got_error == want.error && got_state == want.next && after.invariants_hold();
  if (ok && !got_error) {
    // Exactly the advanced stage carries this event's timestamp.
    ok = after.stage() - before.stage() == (want.next <= enabled ? 1 : 0);
  }
  if (!ok) {
    ++out.mismatches;
    if (out.first_mismatch.empty()) {
      out.first_mismatch = path + " -> state " + std::to_string(got_state) + ", expected " +
                           std::to_string(want.next);
    }
  }
}

void walk(const ShortlistRecord& r, int depth, int max_len, ExhaustiveResult& out, std::string& path) {
  if (depth == max_len) return;
  const int state = classify(r);
  for (int ev = 0; ev < kEventCount; ++ev) {
    const auto e = event(ev, Timestamp{std::chrono::seconds{depth + 1}});
    ShortlistRecord next;
    const auto saved = path.size();
    path += (path.empty() ? "" : ",") + event_name(ev);
    check_step(r, state, ev, e, next, out, path);
    ++out.sequences;
    walk(next, depth + 1, max_len, out, path);
    path.resize(saved);
  }
}

}  // namespace

ShortlistEvent event(int index, Timestamp at) {
  return {kTypes[static_cast<std::size_t>(index / 2)], index % 2 == 0 ? Party::employer : Party::candidate,
          at};
}

std::string event_name(int index) {
  static constexpr std::array<const char*, 6> names{"ES", "CS", "IC", "AC", "VR", "VA"};
  return std::string(names[static_cast<std::size_t>(index / 2)]) + (index % 2 == 0 ? ".e" : ".c");
}

Outcome expected(State s, int ev) {
  const int cell = kTable[static_cast<std::size_t>(s)][static_cast<std::size_t>(ev)];
  switch (cell) {
    case W: return {s, Errc::wrong_actor};
    case D: return {s, Errc::duplicate_event};
    case P: return {s, Errc::precondition_failed};
    default: return {static_cast<State>(cell), std::nullopt};
  }
}

int classify(const ShortlistRecord& r) {
  const bool e = r.employer_shortlisted.has_value(), c = r.candidate_shortlisted.has_value();
  const bool i = r.contact_initiated.has_value(), a = r.contact_accepted.has_value();
  const auto& v = r.video;
  if (v.status == VideoStatus::none && !i && !a) {
    if (!e && !c) return fresh;
    if (e && !c) return emp;
    if (!e && c) return cand;
    return mutual;
  }
  if (!(e && c)) return -1;
  if (i && !a && v.status == VideoStatus::none) return contacted;
  if (!(i && a)) return -1;
  switch (v.status) {
    case VideoStatus::none: return enabled;
    case VideoStatus::requested:
      return v.requested_by == Party::employer ? video_by_emp : video_by_cand;
    case VideoStatus::accepted:
      return v.requested_by == Party::employer ? video_done_emp : video_done_cand;
  }
  return -1;
}

ExhaustiveResult exhaustive(int max_len) {
  ExhaustiveResult out;
  std::string path;
  walk(ShortlistRecord{}, 0, max_len, out, path);
  return out;
}

}  // namespace pa::reference
