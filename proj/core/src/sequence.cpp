#include "revolve/sequence.hpp"

#include <stdexcept>

namespace revolve {

RevolvingSequence::RevolvingSequence(Angle angle, std::vector<Digit> digits)
    : angle_(angle), digits_(std::move(digits)) {
    const std::int64_t order = angle_.order();
    for (const Digit& d : digits_) {
        if (!d.is_zero() && d.exponent() >= order) {
            throw std::invalid_argument("RevolvingSequence: exponent " + std::to_string(d.exponent()) +
                                        " out of range for order " + std::to_string(order));
        }
    }
}

Digit RevolvingSequence::at(std::size_t position) const {
    if (position < 1 || position > digits_.size()) {
        throw std::out_of_range("RevolvingSequence: position " + std::to_string(position) +
                                " out of range 1.." + std::to_string(digits_.size()));
    }
    return digits_[position - 1];
}

std::optional<std::size_t> first_nonzero_index(const RevolvingSequence& s) {
    const auto digits = s.digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!digits[i].is_zero()) {
            return i + 1;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> last_nonzero_up_to(const RevolvingSequence& s, std::size_t k) {
    if (k < 1 || k > s.length()) {
        throw std::out_of_range("last_nonzero_up_to: index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(s.length()));
    }
    const auto digits = s.digits();
    for (std::size_t i = k; i >= 1; --i) {
        if (!digits[i - 1].is_zero()) {
            return i;
        }
    }
    return std::nullopt;
}

bool validate(const RevolvingSequence& s, Condition condition, FirstDigitPolicy policy) {
    const std::int64_t order = s.angle().order();
    std::int64_t last_exponent = 0;
    std::size_t last_position = 0;  // 0 = no nonzero digit yet
    const auto digits = s.digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const Digit d = digits[i];
        if (d.is_zero()) {
            continue;
        }
        const std::int64_t e = d.exponent();
        if (last_position == 0) {
            if (policy == FirstDigitPolicy::must_be_one && e != 0) {
                return false;
            }
        } else {
            std::int64_t cands[2];
            const int n = detail::unit_candidates(condition, order, last_exponent, last_position, cands);
            bool ok = false;
            for (int c = 0; c < n; ++c) {
                ok = ok || cands[c] == e;
            }
            if (!ok) {
                return false;
            }
        }
        last_exponent = e;
        last_position = i + 1;
    }
    return true;
}

Bss compute_bss(const RevolvingSequence& s) {
    const auto digits = s.digits();
    Bss out;
    out.bits.assign(digits.size(), 0);
    // Scan right to left carrying the next nonzero digit; positions with an
    // all-zero future keep bit 0.
    Digit next = Digit::zero();
    for (std::size_t i = digits.size(); i >= 1; --i) {
        const Digit d = digits[i - 1];
        if (!d.is_zero()) {
            if (!next.is_zero() && next == d) {
                out.bits[i - 1] = 1;
            }
            next = d;
        }
    }
    return out;
}

std::vector<RevolvingSequence> enumerate_words(Condition condition, const Angle& angle,
                                               std::size_t length, FirstDigitPolicy policy,
                                               const EnumerationBudget& budget) {
    std::vector<RevolvingSequence> out;
    for_each_word(
        condition, angle, length, policy,
        [&](std::span<const Digit> word) {
            out.emplace_back(angle, std::vector<Digit>(word.begin(), word.end()));
        },
        budget);
    return out;
}

std::uint64_t count_words(Condition condition, const Angle& angle, std::size_t length,
                          FirstDigitPolicy policy, const EnumerationBudget& budget) {
    std::uint64_t n = 0;
    for_each_word(
        condition, angle, length, policy, [&](std::span<const Digit>) { ++n; }, budget);
    return n;
}

std::string format_word(const RevolvingSequence& s) {
    std::string out;
    bool first = true;
    for (const Digit& d : s.digits()) {
        if (!first) {
            out += ',';
        }
        first = false;
        if (d.is_zero()) {
            out += 'z';
        } else {
            out += std::to_string(d.exponent());
        }
    }
    return out;
}

RevolvingSequence parse_word(std::string_view text, const Angle& angle) {
    std::vector<Digit> digits;
    if (text.empty()) {
        return RevolvingSequence(angle, std::move(digits));
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        // tolerate surrounding spaces
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token == "z" || token == "Z") {
            digits.push_back(Digit::zero());
        } else if (!token.empty()) {
            std::int64_t v = 0;
            for (char c : token) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("parse_word: bad digit token \"" + std::string(token) + "\"");
                }
                v = v * 10 + (c - '0');
            }
            digits.push_back(Digit::unit(v, angle));
        } else {
            throw std::invalid_argument("parse_word: empty digit token in \"" + std::string(text) + "\"");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return RevolvingSequence(angle, std::move(digits));
}

}  // namespace revolve
