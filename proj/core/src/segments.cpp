#include "wagepanel/segments.hpp"

#include <algorithm>
#include <array>

namespace wagepanel {

namespace {

constexpr std::array<std::string_view, kNumDimensions> kDimensionNames = {
    "all",    "region", "state",  "industry",          "firm_size",
    "age",    "gender", "employment_status", "wage_tier", "tenure",
};

constexpr std::array<std::string_view, 1> kAllLabels = {"all"};

// Paper listing order: Northeast, Midwest, West, South.
constexpr std::array<std::string_view, 5> kRegionLabels = {
    "northeast", "midwest", "west", "south", "unknown"};

constexpr std::array<std::string_view, 51> kStateCodes = {
    "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA",
    "HI", "IA", "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME",
    "MI", "MN", "MO", "MS", "MT", "NC", "ND", "NE", "NH", "NJ", "NM",
    "NV", "NY", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX",
    "UT", "VA", "VT", "WA", "WI", "WV", "WY"};

constexpr std::array<std::string_view, 52> kStateLabels = {
    "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA",
    "HI", "IA", "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME",
    "MI", "MN", "MO", "MS", "MT", "NC", "ND", "NE", "NH", "NJ", "NM",
    "NV", "NY", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX",
    "UT", "VA", "VT", "WA", "WI", "WV", "WY", "unknown"};

// U.S. Census Bureau four-region assignment, indexed like kStateCodes.
// 0 = northeast, 1 = midwest, 2 = west, 3 = south.
constexpr std::array<std::uint8_t, 51> kStateRegion = {
    /*AK*/ 2, /*AL*/ 3, /*AR*/ 3, /*AZ*/ 2, /*CA*/ 2, /*CO*/ 2, /*CT*/ 0,
    /*DC*/ 3, /*DE*/ 3, /*FL*/ 3, /*GA*/ 3, /*HI*/ 2, /*IA*/ 1, /*ID*/ 2,
    /*IL*/ 1, /*IN*/ 1, /*KS*/ 1, /*KY*/ 3, /*LA*/ 3, /*MA*/ 0, /*MD*/ 3,
    /*ME*/ 0, /*MI*/ 1, /*MN*/ 1, /*MO*/ 1, /*MS*/ 3, /*MT*/ 2, /*NC*/ 3,
    /*ND*/ 1, /*NE*/ 1, /*NH*/ 0, /*NJ*/ 0, /*NM*/ 2, /*NV*/ 2, /*NY*/ 0,
    /*OH*/ 1, /*OK*/ 3, /*OR*/ 2, /*PA*/ 0, /*RI*/ 0, /*SC*/ 3, /*SD*/ 1,
    /*TN*/ 3, /*TX*/ 3, /*UT*/ 2, /*VA*/ 3, /*VT*/ 0, /*WA*/ 2, /*WI*/ 1,
    /*WV*/ 3, /*WY*/ 2};

constexpr std::array<std::string_view, 11> kIndustryLabels = {
    "natural resources and mining",
    "construction",
    "manufacturing",
    "trade and transportation",
    "information",
    "finance/real estate",
    "professional and business services",
    "education and health services",
    "leisure and hospitality",
    "other services",
    "unknown"};

constexpr std::array<std::string_view, 5> kFirmSizeLabels = {
    "1-49", "50-499", "500-999", "1000+", "unknown"};

constexpr std::array<std::string_view, 5> kAgeLabels = {"16-24", "25-34",
                                                        "35-54", "55+",
                                                        "unknown"};

constexpr std::array<std::string_view, 3> kGenderLabels = {"male", "female",
                                                           "unknown"};

constexpr std::array<std::string_view, 3> kStatusLabels = {
    "full_time", "part_time", "unknown"};

constexpr std::array<std::string_view, 5> kWageTierLabels = {
    "<20K", "20K-50K", "50K-75K", "75K+", "unknown"};

constexpr std::array<std::string_view, 5> kTenureLabels = {
    "<3y", "3-5y", "5-10y", "10y+", "unknown"};

std::uint8_t industry_group(std::uint8_t naics) {
    switch (naics) {
        case 21:
            return 0;
        case 23:
            return 1;
        case 31:
        case 32:
        case 33:
            return 2;
        case 42:
        case 44:
        case 45:
        case 48:
        case 49:
        case 22:
            return 3;
        case 51:
            return 4;
        case 52:
        case 53:
            return 5;
        case 54:
        case 55:
        case 56:
            return 6;
        case 61:
        case 62:
            return 7;
        case 71:
        case 72:
            return 8;
        case 81:
            return 9;
        default:
            return 10;  // unknown
    }
}

template <std::size_t N>
std::span<const std::string_view> as_span(
    const std::array<std::string_view, N>& a) {
    return {a.data(), a.size()};
}

}  // namespace

std::string_view dimension_name(Dimension d) {
    return kDimensionNames[static_cast<std::size_t>(d)];
}

std::optional<Dimension> parse_dimension(std::string_view name) {
    for (std::size_t i = 0; i < kDimensionNames.size(); ++i) {
        if (kDimensionNames[i] == name) return static_cast<Dimension>(i);
    }
    return std::nullopt;
}

std::span<const std::string_view> bucket_labels(Dimension d) {
    switch (d) {
        case Dimension::All:
            return as_span(kAllLabels);
        case Dimension::Region:
            return as_span(kRegionLabels);
        case Dimension::State:
            return as_span(kStateLabels);
        case Dimension::Industry:
            return as_span(kIndustryLabels);
        case Dimension::FirmSize:
            return as_span(kFirmSizeLabels);
        case Dimension::Age:
            return as_span(kAgeLabels);
        case Dimension::Gender:
            return as_span(kGenderLabels);
        case Dimension::EmploymentStatus:
            return as_span(kStatusLabels);
        case Dimension::WageTier:
            return as_span(kWageTierLabels);
        case Dimension::Tenure:
            return as_span(kTenureLabels);
    }
    throw UnknownDimensionError("unknown dimension");
}

std::span<const std::string_view> state_codes() { return as_span(kStateCodes); }

std::uint8_t state_index(std::string_view code) {
    auto it = std::lower_bound(kStateCodes.begin(), kStateCodes.end(), code);
    if (it != kStateCodes.end() && *it == code) {
        return static_cast<std::uint8_t>(it - kStateCodes.begin());
    }
    return kUnknownState;
}

std::uint8_t naics_code(std::string_view naics2) {
    if (naics2.size() != 2) return kUnknownNaics;
    if (naics2[0] < '0' || naics2[0] > '9' || naics2[1] < '0' ||
        naics2[1] > '9') {
        return kUnknownNaics;
    }
    return static_cast<std::uint8_t>((naics2[0] - '0') * 10 +
                                     (naics2[1] - '0'));
}

std::uint8_t bucket_index(const Observation& obs, Dimension d) {
    switch (d) {
        case Dimension::All:
            return 0;
        case Dimension::Region:
            if (obs.state == kUnknownState) return 4;
            return kStateRegion[obs.state];
        case Dimension::State:
            return obs.state == kUnknownState ? 51 : obs.state;
        case Dimension::Industry:
            return industry_group(obs.naics);
        case Dimension::FirmSize: {
            const auto n = obs.firm_size;
            if (n < 1) return 4;
            if (n <= 49) return 0;
            if (n <= 499) return 1;
            if (n <= 999) return 2;
            return 3;
        }
        case Dimension::Age: {
            const int a = obs.age_at_quarter_end();
            if (a < 16) return 4;
            if (a <= 24) return 0;
            if (a <= 34) return 1;
            if (a <= 54) return 2;
            return 3;
        }
        case Dimension::Gender:
            switch (obs.gender) {
                case Gender::Male:
                    return 0;
                case Gender::Female:
                    return 1;
                case Gender::Unknown:
                    return 2;
            }
            return 2;
        case Dimension::EmploymentStatus:
            return obs.full_time() ? 0 : 1;
        case Dimension::WageTier: {
            const double w = obs.annualized_wages();
            if (w < 20000.0) return 0;
            if (w < 50000.0) return 1;
            if (w < 75000.0) return 2;
            return 3;
        }
        case Dimension::Tenure: {
            const int t = obs.tenure_years_at_quarter_end();
            if (t < 0) return 4;
            if (t < 3) return 0;
            if (t < 5) return 1;
            if (t < 10) return 2;
            return 3;
        }
    }
    throw UnknownDimensionError("unknown dimension");
}

SegmentKey assign_bucket(const Observation& obs, Dimension d) {
    return SegmentKey{d, std::string(bucket_labels(d)[bucket_index(obs, d)])};
}

std::optional<std::uint8_t> bucket_index_of_label(Dimension d,
                                                  std::string_view label) {
    const auto labels = bucket_labels(d);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<std::uint8_t>(i);
    }
    return std::nullopt;
}

}  // namespace wagepanel
