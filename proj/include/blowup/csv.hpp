#pragma once

#include <string>
#include <string_view>

namespace blowup {

// Locale-independent float formatting (std::to_chars). With
// significant_digits >= 17 the shortest representation that round-trips the
// double is emitted; below that, general format at the given precision.
std::string format_double(double value, int significant_digits);

// Fixed-point with the given number of decimals (key=value reports).
std::string format_fixed(double value, int decimals);

// Strict parse of a full token; throws DomainError on trailing garbage.
double parse_double(std::string_view token);

}  // namespace blowup
