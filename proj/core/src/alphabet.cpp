#include "revolve/alphabet.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace revolve {

namespace {

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Angle Angle::from_fraction(std::int64_t q, std::int64_t p, int sign) {
    if (p < 1) {
        throw std::invalid_argument("Angle: invalid denominator " + std::to_string(p));
    }
    if (q < 0) {
        throw std::invalid_argument("Angle: numerator must be non-negative, got " + std::to_string(q));
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Angle: sign must be +1 or -1");
    }
    const std::int64_t g = std::gcd(q, p);
    q /= g;
    p /= g;
    if (2 * q > p) {
        throw std::invalid_argument("Angle: magnitude exceeds a half turn: " + std::to_string(q) + "/" +
                                    std::to_string(p));
    }
    // 0 and a half turn are sign-symmetric; normalize so equal rotations
    // compare equal field-wise.
    if (q == 0 || 2 * q == p) {
        sign = 1;
    }
    return Angle(q, p, sign);
}

Angle Angle::parse(std::string_view text) {
    std::string_view rest = text;
    int sign = 1;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        sign = rest.front() == '-' ? -1 : 1;
        rest.remove_prefix(1);
    }
    const std::size_t slash = rest.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == rest.size()) {
        throw std::invalid_argument("Angle: expected \"q/p\", got \"" + std::string(text) + "\"");
    }
    auto parse_int = [&](std::string_view part) -> std::int64_t {
        std::int64_t value = 0;
        if (part.empty()) {
            throw std::invalid_argument("Angle: malformed fraction \"" + std::string(text) + "\"");
        }
        for (char c : part) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("Angle: malformed fraction \"" + std::string(text) + "\"");
            }
            value = value * 10 + (c - '0');
        }
        return value;
    };
    return from_fraction(parse_int(rest.substr(0, slash)), parse_int(rest.substr(slash + 1)), sign);
}

double Angle::radians() const {
    return static_cast<double>(sign_) * 2.0 * std::numbers::pi * static_cast<double>(num_) /
           static_cast<double>(den_);
}

Complex Angle::unit_value(std::int64_t k) const {
    const std::int64_t p = order();
    const std::int64_t m = positive_mod(positive_mod(k, p) * (num_ > 0 ? num_ : 0), p);
    switch (p) {
        case 1:
            return {1.0, 0.0};
        case 2:
            return m == 0 ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
        case 4: {
            // order 4 forces q = 1, so theta = sign * pi/2 and the values
            // are the Gaussian units.
            const std::int64_t step = positive_mod(sign_ * m, 4);
            switch (step) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        default: {
            const double t = static_cast<double>(sign_) * 2.0 * std::numbers::pi *
                             static_cast<double>(m) / static_cast<double>(p);
            return {std::cos(t), std::sin(t)};
        }
    }
}

std::string Angle::str() const {
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(num_);
    out += '/';
    out += std::to_string(den_);
    return out;
}

Digit Digit::unit(std::int64_t exponent, const Angle& angle) {
    return Digit(positive_mod(exponent, angle.order()));
}

std::int64_t Digit::exponent() const {
    if (code_ < 0) {
        throw std::logic_error("Digit: zero digit has no exponent");
    }
    return code_;
}

Digit rotate(Digit d, std::int64_t steps, const Angle& angle) {
    if (d.is_zero()) {
        return d;
    }
    return Digit::unit(d.exponent() + steps, angle);
}

Complex digit_value(Digit d, const Angle& angle) {
    if (d.is_zero()) {
        return {0.0, 0.0};
    }
    return angle.unit_value(d.exponent());
}

}  // namespace revolve
