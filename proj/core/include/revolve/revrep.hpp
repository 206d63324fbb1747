#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "revolve/sequence.hpp"

namespace revolve {

struct GaussianInt {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt parse_gaussian(std::string_view text);  // "x,y"
std::string format_gaussian(const GaussianInt& z);

/// The quarter-turn angle of the classical base-(1+i) representation:
/// theta = -pi/2, whose digit cycle is 1 -> -i -> -1 -> i.
Angle revrep_angle();

/// Exact value of a revolving word read as base-(1+i) digits, the first
/// digit carrying the highest power. The word must use revrep_angle() and
/// satisfy the revolving condition; integer arithmetic throughout.
/// Throws std::invalid_argument on an invalid word.
GaussianInt decode(const RevolvingSequence& s);

/// Shortest revolving word (ties broken by enumeration order) whose decode
/// equals z, searched length by length up to max_len. Absent when no word
/// within the bound represents z.
std::optional<RevolvingSequence> encode(const GaussianInt& z, std::size_t max_len,
                                        FirstDigitPolicy policy = FirstDigitPolicy::free);

}  // namespace revolve
