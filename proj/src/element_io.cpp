#include "srpk/element_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "srpk/error.hpp"

namespace srpk::io {

double parse_number(std::string_view token) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (token == "inf" || token == "+inf") return inf;
  if (token == "-inf") return -inf;

  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    raise(ErrorKind::parse_error, "not a number: '" + std::string(token) + "'");
  }
  return value + 0.0;
}

namespace {

std::string format_with(double value, int precision) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;
  std::array<char, 64> buf{};
  std::to_chars_result res = precision > 0
      ? std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, precision)
      : std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_precise(double value) { return format_with(value, 17); }

std::string format_shortest(double value) { return format_with(value, 0); }

}  // namespace srpk::io
