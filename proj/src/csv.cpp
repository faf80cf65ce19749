#include "blowup/csv.hpp"

#include <charconv>
#include <system_error>

#include "blowup/errors.hpp"

namespace blowup {

std::string format_double(double value, int significant_digits) {
  char buf[64];
  std::to_chars_result res{};
  if (significant_digits >= 17) {
    res = std::to_chars(buf, buf + sizeof buf, value);
  } else {
    res = std::to_chars(buf, buf + sizeof buf, value,
                        std::chars_format::general, significant_digits);
  }
  return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw DomainError("parse_double: invalid number '" + std::string(token) +
                      "'");
  }
  return value;
}

}  // namespace blowup
