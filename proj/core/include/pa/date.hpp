#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

namespace pa {

using Date = std::chrono::year_month_day;
using Timestamp = std::chrono::sys_seconds;

/// Parses "YYYY-MM-DD"; throws Error(invalid_argument) on malformed or impossible dates.
Date parse_date(std::string_view text);
std::string format_date(Date date);

/// ISO-8601 UTC, second precision: "YYYY-MM-DDThh:mm:ssZ".
Timestamp parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp ts);

Date date_of(Timestamp ts);

using Clock = std::function<Timestamp()>;

Clock system_clock();
Clock fixed_clock(Timestamp at);

}  // namespace pa
