#pragma once

#include <cstdint>
#include <string>

#include "wagepanel/calendar.hpp"
#include "wagepanel/quarter.hpp"

namespace wagepanel {

enum class Gender : std::uint8_t { Male, Female, Unknown };

// Sentinel indices for missing categorical attributes.
inline constexpr std::uint8_t kUnknownState = 0xFF;
inline constexpr std::uint8_t kUnknownNaics = 0;

// One raw worker x firm x quarter row as parsed from an input file,
// before canonicalization. Identifiers are still strings here.
struct PayrollRecord {
    std::string worker_id;
    std::string firm_id;
    Quarter quarter;
    double total_wages = 0.0;  // currency per quarter
    double total_hours = 0.0;  // hours per quarter
    Date hire_date;
    Date birth_date;
    Gender gender = Gender::Unknown;
    std::string naics;  // 2-digit sector code, "" = unknown
    std::string state;  // 2-letter postal code, "" = unknown
    std::uint32_t firm_size = 1;
};

// Weeks per quarter used to derive weekly hours from quarterly hours.
inline constexpr double kWeeksPerQuarter = 13.0;

// Full-time threshold in weekly hours (inclusive).
inline constexpr double kFullTimeWeeklyHours = 35.0;

// Canonicalized observation: exactly one per (worker, quarter) in a
// PanelDataset. Identifiers are dense indices into the dataset's string
// pools, assigned in lexicographic id order so iteration order is
// independent of input row order.
struct Observation {
    std::uint32_t worker = 0;
    std::uint32_t firm = 0;
    Quarter quarter;
    double total_wages = 0.0;
    double total_hours = 0.0;  // > 0 by construction
    Date hire_date;
    Date birth_date;
    Gender gender = Gender::Unknown;
    std::uint8_t naics = kUnknownNaics;  // numeric 2-digit code, 0 = unknown
    std::uint8_t state = kUnknownState;  // index into state_codes()
    std::uint32_t firm_size = 1;

    double hourly_wage() const { return total_wages / total_hours; }
    double weekly_hours() const { return total_hours / kWeeksPerQuarter; }
    bool full_time() const { return weekly_hours() >= kFullTimeWeeklyHours; }
    int age_at_quarter_end() const {
        return years_between(birth_date, quarter_end(quarter));
    }
    int tenure_years_at_quarter_end() const {
        return years_between(hire_date, quarter_end(quarter));
    }
    double annualized_wages() const { return total_wages * 4.0; }
};

}  // namespace wagepanel
