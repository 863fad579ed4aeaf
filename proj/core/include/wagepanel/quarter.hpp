#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wagepanel/calendar.hpp"

namespace wagepanel {

// One calendar quarter, totally ordered by (year, q).
struct Quarter {
    std::int32_t year = 0;
    std::int32_t q = 1;  // 1..4

    friend auto operator<=>(const Quarter&, const Quarter&) = default;
};

inline Quarter quarter_prev(Quarter t) {
    return t.q == 1 ? Quarter{t.year - 1, 4} : Quarter{t.year, t.q - 1};
}

inline Quarter quarter_next(Quarter t) {
    return t.q == 4 ? Quarter{t.year + 1, 1} : Quarter{t.year, t.q + 1};
}

// Same quarter index one year earlier.
inline Quarter quarter_minus_year(Quarter t) { return Quarter{t.year - 1, t.q}; }

// Last calendar day of the quarter; the reference date for age and
// tenure.
Date quarter_end(Quarter t);

// "2016Q1" form; parse accepts exactly that shape.
std::string format_quarter(Quarter t);
std::optional<Quarter> parse_quarter(std::string_view s);

}  // namespace wagepanel
