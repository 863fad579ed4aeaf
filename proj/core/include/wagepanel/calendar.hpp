#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wagepanel {

// Proleptic Gregorian calendar date. Plain value type; no time zones,
// no time of day.
struct Date {
    std::int16_t year = 0;
    std::uint8_t month = 0;  // 1..12
    std::uint8_t day = 0;    // 1..31

    friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_valid_date(const Date& d);

// Parses strict ISO-8601 "YYYY-MM-DD". Rejects anything else, including
// out-of-range month/day combinations.
std::optional<Date> parse_date(std::string_view s);

std::string format_date(const Date& d);

// Days since 1970-01-01 (negative before). Valid for any Date within
// int16 years.
std::int64_t days_from_civil(const Date& d);
Date civil_from_days(std::int64_t days);

// Completed years from `from` to `to` (anniversary arithmetic). A
// Feb-29 anniversary completes on Mar 1 in non-leap years. Negative if
// `to` precedes `from` by at least a year.
int years_between(const Date& from, const Date& to);

}  // namespace wagepanel
