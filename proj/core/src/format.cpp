#include "revolve/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace revolve {

std::string format_double(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

double parse_double(std::string_view text) {
    std::string owned(text);
    const char* begin = owned.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw std::invalid_argument("expected a number, got \"" + owned + "\"");
    }
    return v;
}

Complex parse_complex(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("expected \"re,im\", got \"" + std::string(text) + "\"");
    }
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

}  // namespace revolve
