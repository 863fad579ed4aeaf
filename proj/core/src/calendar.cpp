#include "wagepanel/calendar.hpp"
#include "wagepanel/quarter.hpp"

#include <array>
#include <cstdio>

namespace wagepanel {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 13> kDays = {0, 31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[static_cast<std::size_t>(m)];
}

}  // namespace

bool is_valid_date(const Date& d) {
    if (d.month < 1 || d.month > 12) return false;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
    return true;
}

std::optional<Date> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto digits = [](std::string_view t) {
        int v = 0;
        for (char c : t) {
            if (c < '0' || c > '9') return -1;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    int y = digits(s.substr(0, 4));
    int m = digits(s.substr(5, 2));
    int d = digits(s.substr(8, 2));
    if (y < 0 || m < 0 || d < 0) return std::nullopt;
    Date out{static_cast<std::int16_t>(y), static_cast<std::uint8_t>(m),
             static_cast<std::uint8_t>(d)};
    if (!is_valid_date(out)) return std::nullopt;
    return out;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year),
                  static_cast<unsigned>(d.month), static_cast<unsigned>(d.day));
    return buf;
}

// Howard Hinnant's civil-days algorithms.
std::int64_t days_from_civil(const Date& d) {
    std::int64_t y = d.year;
    const int m = d.month;
    const int dd = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + dd - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : static_cast<unsigned>(-9));
    return Date{static_cast<std::int16_t>(y + (m <= 2)),
                static_cast<std::uint8_t>(m), static_cast<std::uint8_t>(d)};
}

int years_between(const Date& from, const Date& to) {
    int years = to.year - from.year;
    if (to.month < from.month ||
        (to.month == from.month && to.day < from.day)) {
        --years;
    }
    return years;
}

Date quarter_end(Quarter t) {
    static constexpr std::array<std::uint8_t, 5> kMonth = {0, 3, 6, 9, 12};
    static constexpr std::array<std::uint8_t, 5> kDay = {0, 31, 30, 30, 31};
    const auto qi = static_cast<std::size_t>(t.q);
    return Date{static_cast<std::int16_t>(t.year), kMonth[qi], kDay[qi]};
}

std::string format_quarter(Quarter t) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04dQ%d", t.year, t.q);
    return buf;
}

std::optional<Quarter> parse_quarter(std::string_view s) {
    if (s.size() != 6 || s[4] != 'Q') return std::nullopt;
    int y = 0;
    for (char c : s.substr(0, 4)) {
        if (c < '0' || c > '9') return std::nullopt;
        y = y * 10 + (c - '0');
    }
    const char qc = s[5];
    if (qc < '1' || qc > '4') return std::nullopt;
    return Quarter{y, qc - '0'};
}

}  // namespace wagepanel
