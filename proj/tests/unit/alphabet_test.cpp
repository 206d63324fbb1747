#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "revolve/alphabet.hpp"

namespace {

using revolve::Angle;
using revolve::Complex;
using revolve::Digit;

const Angle kQuarter = Angle::from_fraction(1, 4, 1);        // pi/2
const Angle kQuarterNeg = Angle::from_fraction(1, 4, -1);    // -pi/2
const Angle kThird = Angle::from_fraction(1, 3, 1);          // 2*pi/3

TEST_CASE("from_fraction reduces and validates") {
    const Angle a = Angle::from_fraction(1, 4, -1);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 4);
    CHECK(a.sign() == -1);
    CHECK(a.order() == 4);
    CHECK(a.radians() == doctest::Approx(-std::numbers::pi / 2).epsilon(1e-15));

    const Angle zero = Angle::from_fraction(0, 1, 1);
    CHECK(zero.order() == 1);
    CHECK(zero.radians() == 0.0);

    // gcd oracle: 2/6 reduces by gcd(2,6)=2
    CHECK(std::gcd(2, 6) == 2);
    const Angle reduced = Angle::from_fraction(2, 6, 1);
    CHECK(reduced.numerator() == 1);
    CHECK(reduced.denominator() == 3);
    CHECK(reduced.order() == 3);

    CHECK_THROWS_AS(Angle::from_fraction(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Angle::from_fraction(2, 3, 1), std::invalid_argument);  // > half turn
    CHECK_THROWS_AS(Angle::from_fraction(-1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Angle::from_fraction(1, 4, 0), std::invalid_argument);
}

TEST_CASE("from_fraction is idempotent under re-reduction") {
    for (const Angle& a : {kQuarter, kQuarterNeg, kThird, Angle::from_fraction(0, 7, -1),
                           Angle::from_fraction(3, 12, 1), Angle::from_fraction(5, 12, -1)}) {
        CHECK(Angle::from_fraction(a.numerator(), a.denominator(), a.sign()) == a);
    }
}

TEST_CASE("angle textual form round trips") {
    CHECK(Angle::parse("-1/4") == kQuarterNeg);
    CHECK(Angle::parse("+1/3") == kThird);
    CHECK(Angle::parse("0/1").order() == 1);
    CHECK(Angle::parse("2/6") == Angle::from_fraction(1, 3, 1));
    for (const Angle& a : {kQuarter, kQuarterNeg, kThird}) {
        CHECK(Angle::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Angle::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(Angle::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Angle::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Angle::parse(""), std::invalid_argument);
}

TEST_CASE("half turn and zero canonicalize the sign") {
    CHECK(Angle::from_fraction(1, 2, -1) == Angle::from_fraction(1, 2, 1));
    CHECK(Angle::from_fraction(0, 5, -1) == Angle::from_fraction(0, 1, 1));
}

TEST_CASE("rotate steps through the cycle") {
    CHECK(rotate(Digit::unit(0, kQuarter), 1, kQuarter) == Digit::unit(1, kQuarter));
    CHECK(rotate(Digit::zero(), 5, kQuarter) == Digit::zero());
    // -i steps to 1: 3 + 1 = 4 = 0 mod 4
    CHECK(rotate(Digit::unit(3, kQuarter), 1, kQuarter) == Digit::unit(0, kQuarter));
    CHECK(rotate(Digit::unit(0, kQuarter), -1, kQuarter) == Digit::unit(3, kQuarter));
}

TEST_CASE("digit_value hits the exact Gaussian units for order 4") {
    CHECK(digit_value(Digit::unit(2, kQuarter), kQuarter) == Complex{-1.0, 0.0});
    CHECK(digit_value(Digit::unit(1, kQuarter), kQuarter) == Complex{0.0, 1.0});
    CHECK(digit_value(Digit::unit(1, kQuarterNeg), kQuarterNeg) == Complex{0.0, -1.0});
    CHECK(digit_value(Digit::unit(3, kQuarterNeg), kQuarterNeg) == Complex{0.0, 1.0});
    CHECK(digit_value(Digit::zero(), kQuarter) == Complex{0.0, 0.0});
}

TEST_CASE("digit_value order 3 matches cosine/sine") {
    const Complex v = digit_value(Digit::unit(1, kThird), kThird);
    const double t = 2.0 * std::numbers::pi / 3.0;
    CHECK(std::abs(v - Complex{std::cos(t), std::sin(t)}) < 1e-15);
    CHECK(v.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
}

TEST_CASE("digit exponent access") {
    CHECK(Digit::unit(7, kQuarter).exponent() == 3);   // reduced mod 4
    CHECK(Digit::unit(-1, kQuarter).exponent() == 3);  // negative exponents wrap
    CHECK_THROWS_AS(Digit::zero().exponent(), std::logic_error);
}

TEST_CASE("rotation composes additively and matches multiplication by e^{i theta}") {
    std::mt19937_64 rng(20240601);
    const Angle angles[] = {kQuarter, kQuarterNeg, kThird, Angle::from_fraction(1, 2, 1),
                            Angle::from_fraction(0, 1, 1), Angle::from_fraction(1, 6, -1),
                            Angle::from_fraction(5, 12, 1)};
    for (int trial = 0; trial < 500; ++trial) {
        const Angle& a = angles[rng() % std::size(angles)];
        const std::int64_t order = a.order();
        const Digit d = (rng() % 4 == 0) ? Digit::zero()
                                         : Digit::unit(static_cast<std::int64_t>(rng() % order), a);
        const std::int64_t s = static_cast<std::int64_t>(rng() % 21) - 10;
        const std::int64_t t = static_cast<std::int64_t>(rng() % 21) - 10;
        CHECK(rotate(rotate(d, s, a), t, a) == rotate(d, s + t, a));

        if (!d.is_zero()) {
            CHECK(std::abs(std::abs(digit_value(d, a)) - 1.0) < 1e-15);
        }
        const Complex unit = std::polar(1.0, a.radians());
        CHECK(std::abs(digit_value(rotate(d, 1, a), a) - unit * digit_value(d, a)) < 1e-14);
    }
}

}  // namespace
