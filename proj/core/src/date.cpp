#include "pa/date.hpp"

#include <charconv>
#include <cstdio>

#include "pa/error.hpp"

namespace pa {
namespace {

int parse_field(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  const char* first = text.data() + pos;
  const char* last = first + len;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw Error(Errc::invalid_argument, "malformed date/time: " + std::string(text));
  }
  return value;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw Error(Errc::invalid_argument, "expected YYYY-MM-DD, got: " + std::string(text));
  }
  const Date d{std::chrono::year{parse_field(text, 0, 4)},
               std::chrono::month{static_cast<unsigned>(parse_field(text, 5, 2))},
               std::chrono::day{static_cast<unsigned>(parse_field(text, 8, 2))}};
  if (!d.ok()) throw Error(Errc::invalid_argument, "no such date: " + std::string(text));
  return d;
}

std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

Timestamp parse_timestamp(std::string_view text) {
  if (text.size() != 20 || text[10] != 'T' || text[13] != ':' || text[16] != ':' ||
      text[19] != 'Z') {
    throw Error(Errc::invalid_argument, "expected YYYY-MM-DDThh:mm:ssZ, got: " + std::string(text));
  }
  const Date d = parse_date(text.substr(0, 10));
  const int h = parse_field(text, 11, 2);
  const int m = parse_field(text, 14, 2);
  const int s = parse_field(text, 17, 2);
  if (h > 23 || m > 59 || s > 59) {
    throw Error(Errc::invalid_argument, "time out of range: " + std::string(text));
  }
  return std::chrono::sys_days{d} + std::chrono::hours{h} + std::chrono::minutes{m} +
         std::chrono::seconds{s};
}

std::string format_timestamp(Timestamp ts) {
  const auto day = std::chrono::floor<std::chrono::days>(ts);
  const std::chrono::hh_mm_ss hms{ts - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(Date{day}).c_str(),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

Date date_of(Timestamp ts) { return Date{std::chrono::floor<std::chrono::days>(ts)}; }

Clock system_clock() {
  return [] { return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()); };
}

Clock fixed_clock(Timestamp at) {
  return [at] { return at; };
}

}  // namespace pa
