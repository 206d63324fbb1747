#pragma once

#include <string>
#include <string_view>

#include "revolve/alphabet.hpp"

namespace revolve {

/// Shortest-width %.17g rendering, enough digits for an exact double round
/// trip. Negative zero is canonicalized to "0".
std::string format_double(double v);

/// "re,im" with format_double on both parts.
std::string format_complex(Complex z);

double parse_double(std::string_view text);

/// Parses "re,im".
Complex parse_complex(std::string_view text);

}  // namespace revolve
