#pragma once

#include <cstdint>
#include <string>

namespace jsonspace {

// Deterministic decimal rendering used by every report writer. All of it
// is integer arithmetic on scaled values, so the output never depends on
// libc printf rounding behavior.

/// Truncates toward zero to two decimals (29.16999 -> 29.16). A tiny
/// epsilon absorbs binary representation error so that a value which is
/// mathematically 29.17 does not truncate to 29.16.
double truncate2(double value);

/// Renders with exactly two decimals after truncate2, e.g. "3.80".
std::string fixed2_truncated(double value);

/// Rounds half away from zero to one decimal and renders it, e.g. "34.1".
std::string fixed1(double value);

/// Rounds half away from zero to `decimals` and renders with exactly that
/// many digits after the point.
std::string fixed(double value, int decimals);

/// Compression-style ratio "NxM" text: numerator/denominator truncated
/// toward zero to one decimal, rendered as "5.8x", integral ratios drop
/// the ".0" ("67x"). Denominator must be positive.
std::string ratio_text(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace jsonspace
