#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "revolve/alphabet.hpp"

namespace revolve {

/// The three revolving conditions. In every case zero digits may appear
/// anywhere; the condition constrains how one nonzero digit follows the
/// previous nonzero digit:
///   grc - always advance by one rotation step,
///   src - advance forward when the previous nonzero digit sits at an odd
///         (1-based) position, backward when at an even position,
///   trc - stay in place or advance by one rotation step.
enum class Condition { grc, src, trc };

/// Whether the first nonzero digit of a word is unconstrained or pinned
/// to Unit(0) = 1.
enum class FirstDigitPolicy { free, must_be_one };

/// A finite digit word over one angle's alphabet. Positions are 1-based
/// throughout, matching the classical index convention; a finite word stands
/// for the infinite sequence obtained by appending zeros.
class RevolvingSequence {
public:
    RevolvingSequence() = default;

    /// Throws std::invalid_argument if any unit exponent is out of range
    /// for the angle's order.
    RevolvingSequence(Angle angle, std::vector<Digit> digits);

    const Angle& angle() const { return angle_; }
    std::span<const Digit> digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// 1-based access; throws std::out_of_range.
    Digit at(std::size_t position) const;

    friend bool operator==(const RevolvingSequence&, const RevolvingSequence&) = default;

private:
    Angle angle_;
    std::vector<Digit> digits_;
};

/// Binary static sequence of a word: bits[i] = 1 exactly when digit i+1 is
/// nonzero and the next nonzero digit within the word equals it. Positions
/// whose future inside the word is all zero get 0 (the zero-future
/// convention for truncations).
struct Bss {
    std::vector<std::uint8_t> bits;

    friend bool operator==(const Bss&, const Bss&) = default;
};

/// Smallest 1-based index holding a nonzero digit; absent for all-zero words.
std::optional<std::size_t> first_nonzero_index(const RevolvingSequence& s);

/// Largest 1-based index j <= k holding a nonzero digit; absent when the
/// prefix up to k is all zero. Throws std::out_of_range unless 1 <= k <= length.
std::optional<std::size_t> last_nonzero_up_to(const RevolvingSequence& s, std::size_t k);

bool validate(const RevolvingSequence& s, Condition condition, FirstDigitPolicy policy);

Bss compute_bss(const RevolvingSequence& s);

/// Enumeration depth caps. The word count grows like 2^n (grc/src) or
/// 3^n/2 (trc), so the caps bound the total work.
struct EnumerationBudget {
    std::size_t grc_src_max_length = 24;
    std::size_t trc_max_length = 16;

    std::size_t max_length(Condition c) const {
        return c == Condition::trc ? trc_max_length : grc_src_max_length;
    }
};

namespace detail {

/// Unit exponents allowed at the next position given the previous nonzero
/// digit's exponent and 1-based position. Returns the count (0..2) and fills
/// `out` in increasing exponent order; the zero digit is always allowed and
/// is not reported here.
inline int unit_candidates(Condition condition, std::int64_t order, std::int64_t last_exponent,
                           std::size_t last_position, std::int64_t out[2]) {
    switch (condition) {
        case Condition::grc:
            out[0] = (last_exponent + 1) % order;
            return 1;
        case Condition::src: {
            // Parity of the absolute 1-based position of the previous
            // nonzero digit decides the rotation direction.
            const std::int64_t step = (last_position % 2 == 1) ? 1 : -1;
            out[0] = ((last_exponent + step) % order + order) % order;
            return 1;
        }
        case Condition::trc: {
            const std::int64_t stay = last_exponent;
            const std::int64_t advance = (last_exponent + 1) % order;
            if (stay == advance) {
                out[0] = stay;
                return 1;
            }
            out[0] = stay < advance ? stay : advance;
            out[1] = stay < advance ? advance : stay;
            return 2;
        }
    }
    return 0;
}

}  // namespace detail

/// Visits every valid word of the given length exactly once, in lexicographic
/// order with Zero < Unit(0) < Unit(1) < ... and the first position most
/// significant. The visitor receives a borrowed digit buffer valid only for
/// the duration of the call; it may return void, or bool with false meaning
/// "stop enumerating".
///
/// Throws std::runtime_error when the length exceeds the budget cap.
template <typename Visitor>
void for_each_word(Condition condition, const Angle& angle, std::size_t length,
                   FirstDigitPolicy policy, Visitor&& visit,
                   const EnumerationBudget& budget = {}) {
    if (length > budget.max_length(condition)) {
        throw std::runtime_error("enumeration budget exceeded: length " + std::to_string(length) +
                                 " > cap " + std::to_string(budget.max_length(condition)));
    }
    const std::int64_t order = angle.order();
    std::vector<Digit> word(length, Digit::zero());
    bool stopped = false;

    auto emit = [&]() -> void {
        using Result = std::invoke_result_t<Visitor&, std::span<const Digit>>;
        if constexpr (std::is_void_v<Result>) {
            visit(std::span<const Digit>(word));
        } else {
            if (!visit(std::span<const Digit>(word))) {
                stopped = true;
            }
        }
    };

    // last_position == 0 means no nonzero digit yet.
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t last_exponent,
                   std::size_t last_position) -> void {
        if (stopped) {
            return;
        }
        if (pos == length) {
            emit();
            return;
        }
        word[pos] = Digit::zero();
        self(self, pos + 1, last_exponent, last_position);
        if (stopped) {
            return;
        }
        if (last_position == 0) {
            const std::int64_t limit = policy == FirstDigitPolicy::must_be_one ? 1 : order;
            for (std::int64_t e = 0; e < limit && !stopped; ++e) {
                word[pos] = Digit::unit(e, angle);
                self(self, pos + 1, e, pos + 1);
            }
        } else {
            std::int64_t cands[2];
            const int n = detail::unit_candidates(condition, order, last_exponent, last_position, cands);
            for (int i = 0; i < n && !stopped; ++i) {
                word[pos] = Digit::unit(cands[i], angle);
                self(self, pos + 1, cands[i], pos + 1);
            }
        }
        word[pos] = Digit::zero();
    };
    rec(rec, 0, 0, 0);
}

/// Materialized enumeration, same order as for_each_word.
std::vector<RevolvingSequence> enumerate_words(Condition condition, const Angle& angle,
                                               std::size_t length, FirstDigitPolicy policy,
                                               const EnumerationBudget& budget = {});

/// Number of valid words of the given length.
std::uint64_t count_words(Condition condition, const Angle& angle, std::size_t length,
                          FirstDigitPolicy policy, const EnumerationBudget& budget = {});

/// Textual digit-word form: comma-separated unit exponents with "z" for the
/// zero digit, e.g. "0,z,1,1". The empty string is the empty word.
std::string format_word(const RevolvingSequence& s);
RevolvingSequence parse_word(std::string_view text, const Angle& angle);

}  // namespace revolve
