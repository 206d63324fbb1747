#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace revolve {

using Complex = std::complex<double>;

/// Rotation angle theta = sign * 2*pi * q/p, stored as a reduced signed
/// fraction of a full turn with q/p <= 1/2 (so theta covers (-pi, pi]).
///
/// The multiplicative order of e^{i*theta} equals the reduced denominator,
/// which is what all digit/exponent arithmetic runs on. Conversion to a
/// complex number happens only at evaluation boundaries.
class Angle {
public:
    /// Zero angle (0/1, positive).
    Angle() : num_(0), den_(1), sign_(1) {}

    /// Builds the reduced angle sign * 2*pi * q/p.
    /// Throws std::invalid_argument if p < 1, q < 0, sign not in {-1,+1},
    /// or q/p > 1/2 after reduction.
    static Angle from_fraction(std::int64_t q, std::int64_t p, int sign);

    /// Parses the textual form "q/p" with an optional leading sign,
    /// e.g. "-1/4" for theta = -pi/2.
    static Angle parse(std::string_view text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    int sign() const { return sign_; }

    /// Multiplicative order of e^{i*theta}: the reduced denominator for a
    /// nonzero angle, 1 for the zero angle.
    std::int64_t order() const { return num_ > 0 ? den_ : 1; }

    double radians() const;

    /// e^{i*k*theta}. Exact (+-1, +-i) for orders 1, 2 and 4; cosine/sine of
    /// the reduced rational angle otherwise.
    Complex unit_value(std::int64_t k) const;

    /// Canonical textual form, re-parsable by parse().
    std::string str() const;

    friend bool operator==(const Angle&, const Angle&) = default;

private:
    Angle(std::int64_t q, std::int64_t p, int sign) : num_(q), den_(p), sign_(sign) {}

    std::int64_t num_;
    std::int64_t den_;
    int sign_;
};

/// One symbol of the digit alphabet {0} union {e^{i*k*theta}}: either the
/// zero digit or a unit held by its exponent k, reduced modulo the angle's
/// order. Sequence logic stays in exact integer arithmetic; floats appear
/// only through digit_value().
class Digit {
public:
    Digit() : code_(-1) {}

    static Digit zero() { return Digit(-1); }

    /// Unit digit e^{i*exponent*theta}; the exponent is reduced modulo
    /// order(angle), so any integer (including negatives) is accepted.
    static Digit unit(std::int64_t exponent, const Angle& angle);

    bool is_zero() const { return code_ < 0; }

    /// Reduced exponent of a unit digit. Throws std::logic_error on the
    /// zero digit.
    std::int64_t exponent() const;

    /// Orders digits Zero < Unit(0) < Unit(1) < ...; this is the digit
    /// order used by lexicographic enumeration.
    friend auto operator<=>(const Digit&, const Digit&) = default;

private:
    explicit Digit(std::int64_t code) : code_(code) {}

    std::int64_t code_;
};

/// Multiplies a digit by e^{i*steps*theta}: Zero stays Zero, Unit(k) becomes
/// Unit(k + steps mod order). rotate(d, 1) is one step forward in the cyclic
/// pattern regardless of the angle's sign.
Digit rotate(Digit d, std::int64_t steps, const Angle& angle);

/// Complex value of a digit: 0 for Zero, e^{i*k*theta} for Unit(k).
Complex digit_value(Digit d, const Angle& angle);

}  // namespace revolve
