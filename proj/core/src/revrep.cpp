#include "revolve/revrep.hpp"

#include <stdexcept>

namespace revolve {

namespace {

// Unit digit values for theta = -pi/2: exponent k -> e^{-ik*pi/2}.
constexpr std::int64_t kUnitX[4] = {1, 0, -1, 0};
constexpr std::int64_t kUnitY[4] = {0, -1, 0, 1};

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("expected \"x,y\", got \"" + std::string(text) + "\"");
    }
    auto parse_int = [&](std::string_view part) -> std::int64_t {
        bool negative = false;
        if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
            negative = part.front() == '-';
            part.remove_prefix(1);
        }
        if (part.empty()) {
            throw std::invalid_argument("malformed integer in \"" + std::string(text) + "\"");
        }
        std::int64_t v = 0;
        for (char c : part) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed integer in \"" + std::string(text) + "\"");
            }
            v = v * 10 + (c - '0');
        }
        return negative ? -v : v;
    };
    return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

std::string format_gaussian(const GaussianInt& z) {
    return std::to_string(z.x) + "," + std::to_string(z.y);
}

Angle revrep_angle() { return Angle::from_fraction(1, 4, -1); }

GaussianInt decode(const RevolvingSequence& s) {
    if (s.angle() != revrep_angle()) {
        throw std::invalid_argument("decode: word must use the quarter-turn angle -1/4");
    }
    if (!validate(s, Condition::grc, FirstDigitPolicy::free)) {
        throw std::invalid_argument("decode: word does not satisfy the revolving condition");
    }
    // Horner over base 1+i: multiplying (x,y) by 1+i gives (x-y, x+y).
    std::int64_t x = 0, y = 0;
    for (const Digit& d : s.digits()) {
        const std::int64_t nx = x - y;
        const std::int64_t ny = x + y;
        x = nx;
        y = ny;
        if (!d.is_zero()) {
            x += kUnitX[d.exponent()];
            y += kUnitY[d.exponent()];
        }
    }
    return {x, y};
}

std::optional<RevolvingSequence> encode(const GaussianInt& z, std::size_t max_len,
                                        FirstDigitPolicy policy) {
    const Angle angle = revrep_angle();
    // TODO: replace the length-by-length search with a digit-recursive
    // encoder working backwards from the units digit.
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::optional<RevolvingSequence> found;
        for_each_word(Condition::grc, angle, len, policy, [&](std::span<const Digit> word) -> bool {
            std::int64_t x = 0, y = 0;
            for (const Digit& d : word) {
                const std::int64_t nx = x - y;
                const std::int64_t ny = x + y;
                x = nx;
                y = ny;
                if (!d.is_zero()) {
                    x += kUnitX[d.exponent()];
                    y += kUnitY[d.exponent()];
                }
            }
            if (x == z.x && y == z.y) {
                found.emplace(angle, std::vector<Digit>(word.begin(), word.end()));
                return false;
            }
            return true;
        });
        if (found) {
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace revolve
