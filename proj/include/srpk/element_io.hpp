#pragma once

#include <string>
#include <string_view>

namespace srpk::io {

/// Parses a decimal number or one of the tokens `inf`, `+inf`, `-inf`.
/// Throws Error(parse_error) on anything else, including trailing garbage.
/// Negative zero is folded to +0 so that each element has one bit pattern.
double parse_number(std::string_view token);

/// 17 significant digits; `inf` / `-inf` for infinities.
std::string format_precise(double value);

/// Shortest decimal that round-trips; `inf` / `-inf` for infinities.
std::string format_shortest(double value);

}  // namespace srpk::io
