#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wagepanel/records.hpp"

namespace wagepanel {

// Report dimensions, in canonical output order. All is the headline row.
enum class Dimension : std::uint8_t {
    All,
    Region,
    State,
    Industry,
    FirmSize,
    Age,
    Gender,
    EmploymentStatus,
    WageTier,
    Tenure,
};

inline constexpr std::size_t kNumDimensions = 10;

struct UnknownDimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view dimension_name(Dimension d);
std::optional<Dimension> parse_dimension(std::string_view name);

// Closed label set for a dimension. The last label is always the
// reserved "unknown" bucket except for All, whose single bucket is
// "all". Order within the span is the canonical report order.
std::span<const std::string_view> bucket_labels(Dimension d);

// (dimension, bucket) pair identifying one report row.
struct SegmentKey {
    Dimension dimension = Dimension::All;
    std::string bucket = "all";

    friend bool operator==(const SegmentKey&, const SegmentKey&) = default;
};

// Index of the bucket this observation falls into, within
// bucket_labels(d). Values outside the published taxonomy (e.g. age 15,
// unmapped sector codes) land in the "unknown" bucket.
std::uint8_t bucket_index(const Observation& obs, Dimension d);

SegmentKey assign_bucket(const Observation& obs, Dimension d);

// Index of `label` within bucket_labels(d), if valid.
std::optional<std::uint8_t> bucket_index_of_label(Dimension d,
                                                  std::string_view label);

// The 51 two-letter postal codes (50 states + DC), sorted.
std::span<const std::string_view> state_codes();

// Index into state_codes(), or kUnknownState.
std::uint8_t state_index(std::string_view code);

// Numeric 2-digit sector code, or kUnknownNaics if not two ASCII digits.
std::uint8_t naics_code(std::string_view naics2);

}  // namespace wagepanel
