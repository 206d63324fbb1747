#include "revolve/series.hpp"

#include <cmath>
#include <stdexcept>

#include "revolve/format.hpp"

namespace revolve {

namespace {

struct FamilyTraits {
    Condition condition;
    FirstDigitPolicy policy;
    int start;
    std::string_view name;
};

constexpr FamilyTraits kTraits[] = {
    {Condition::grc, FirstDigitPolicy::must_be_one, 1, "x1"},
    {Condition::grc, FirstDigitPolicy::free, 1, "x"},
    {Condition::grc, FirstDigitPolicy::must_be_one, 0, "h1"},
    {Condition::grc, FirstDigitPolicy::free, 0, "h"},
    {Condition::src, FirstDigitPolicy::must_be_one, 1, "x2_1"},
    {Condition::src, FirstDigitPolicy::free, 1, "x2"},
    {Condition::src, FirstDigitPolicy::must_be_one, 0, "h2_1"},
    {Condition::src, FirstDigitPolicy::free, 0, "h2"},
    {Condition::trc, FirstDigitPolicy::must_be_one, 1, "t1"},
    {Condition::trc, FirstDigitPolicy::free, 1, "t"},
};

const FamilyTraits& traits(Family f) { return kTraits[static_cast<int>(f)]; }

void check_start(int start) {
    if (start != 0 && start != 1) {
        throw std::invalid_argument("series: start index must be 0 or 1");
    }
}

Complex eval_grc_span(std::span<const Digit> digits, const Angle& angle, Complex alpha, int start) {
    Complex sum{0.0, 0.0};
    Complex power = start == 1 ? alpha : Complex{1.0, 0.0};
    for (const Digit& d : digits) {
        if (!d.is_zero()) {
            sum += digit_value(d, angle) * power;
        }
        power *= alpha;
    }
    return sum;
}

Complex eval_src_span(std::span<const Digit> digits, const Angle& angle, Complex alpha, int start) {
    const Complex conj_alpha = std::conj(alpha);
    Complex sum{0.0, 0.0};
    Complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const Complex eta = (i % 2 == 0) ? alpha : conj_alpha;  // eta_{i+1}
        if (start == 1) {
            prod *= eta;
            if (!digits[i].is_zero()) {
                sum += digit_value(digits[i], angle) * prod;
            }
        } else {
            if (!digits[i].is_zero()) {
                sum += digit_value(digits[i], angle) * prod;
            }
            prod *= eta;
        }
    }
    return sum;
}

/// bits must be the BSS of the word. A set bit swaps one alpha factor for
/// beta (a branch, never a complex power).
Complex eval_trc_span(std::span<const Digit> digits, const Angle& angle, Complex alpha, Complex beta,
                      std::span<const std::uint8_t> bits) {
    Complex sum{0.0, 0.0};
    Complex prev_power{1.0, 0.0};  // alpha^{m-1}
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!digits[i].is_zero()) {
            const Complex factor = bits[i] ? prev_power * beta : prev_power * alpha;
            sum += digit_value(digits[i], angle) * factor;
        }
        prev_power *= alpha;
    }
    return sum;
}

void compute_bss_span(std::span<const Digit> digits, std::vector<std::uint8_t>& bits) {
    bits.assign(digits.size(), 0);
    Digit next = Digit::zero();
    for (std::size_t i = digits.size(); i >= 1; --i) {
        const Digit d = digits[i - 1];
        if (!d.is_zero()) {
            if (!next.is_zero() && next == d) {
                bits[i - 1] = 1;
            }
            next = d;
        }
    }
}

}  // namespace

Condition family_condition(Family f) { return traits(f).condition; }
FirstDigitPolicy family_policy(Family f) { return traits(f).policy; }
int family_start_index(Family f) { return traits(f).start; }
std::string_view family_name(Family f) { return traits(f).name; }

Family parse_family(std::string_view name) {
    for (int i = 0; i < 10; ++i) {
        if (kTraits[i].name == name) {
            return static_cast<Family>(i);
        }
    }
    throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

void validate_family_params(Family f, const FamilyParams& p) {
    if (std::abs(p.alpha) >= 1.0) {
        throw std::invalid_argument("family params: |alpha| must be < 1");
    }
    const bool needs_beta = family_condition(f) == Condition::trc;
    if (needs_beta && !p.beta.has_value()) {
        throw std::invalid_argument("family params: beta required for the t families");
    }
    if (p.beta && std::abs(*p.beta) >= 1.0) {
        throw std::invalid_argument("family params: |beta| must be < 1");
    }
    if (needs_beta && p.alpha == Complex{0.0, 0.0}) {
        throw std::invalid_argument("family params: alpha must be nonzero for the t families");
    }
}

Complex eval_grc_series(const RevolvingSequence& s, Complex alpha, int start) {
    check_start(start);
    return eval_grc_span(s.digits(), s.angle(), alpha, start);
}

Complex eval_src_series(const RevolvingSequence& s, Complex alpha, int start) {
    check_start(start);
    return eval_src_span(s.digits(), s.angle(), alpha, start);
}

Complex eval_trc_series(const RevolvingSequence& s, Complex alpha, Complex beta) {
    if (alpha == Complex{0.0, 0.0}) {
        throw std::invalid_argument("eval_trc_series: degenerate parameter alpha = 0");
    }
    if (!validate(s, Condition::trc, FirstDigitPolicy::free)) {
        throw std::invalid_argument("eval_trc_series: word does not satisfy the ternary condition");
    }
    std::vector<std::uint8_t> bits;
    compute_bss_span(s.digits(), bits);
    return eval_trc_span(s.digits(), s.angle(), alpha, beta, bits);
}

Complex eval_family_series(Family f, const FamilyParams& p, const RevolvingSequence& s) {
    switch (family_condition(f)) {
        case Condition::grc:
            return eval_grc_series(s, p.alpha, family_start_index(f));
        case Condition::src:
            return eval_src_series(s, p.alpha, family_start_index(f));
        case Condition::trc:
            if (!p.beta) {
                throw std::invalid_argument("eval_family_series: beta required for the t families");
            }
            return eval_trc_series(s, p.alpha, *p.beta);
    }
    throw std::logic_error("eval_family_series: unreachable");
}

PointCloud make_cloud(Family f, const FamilyParams& p, std::size_t depth,
                      const EnumerationBudget& budget) {
    validate_family_params(f, p);
    const Condition condition = family_condition(f);
    const FirstDigitPolicy policy = family_policy(f);
    const int start = family_start_index(f);

    PointCloud cloud;
    cloud.source = std::string(family_name(f));
    cloud.depth = static_cast<long>(depth);
    cloud.params.emplace_back("alpha", format_complex(p.alpha));
    if (p.beta) {
        cloud.params.emplace_back("beta", format_complex(*p.beta));
    }
    cloud.params.emplace_back("theta", p.angle.str());

    std::vector<std::uint8_t> bits;
    for_each_word(
        condition, p.angle, depth, policy,
        [&](std::span<const Digit> word) {
            switch (condition) {
                case Condition::grc:
                    cloud.points.push_back(eval_grc_span(word, p.angle, p.alpha, start));
                    break;
                case Condition::src:
                    cloud.points.push_back(eval_src_span(word, p.angle, p.alpha, start));
                    break;
                case Condition::trc:
                    compute_bss_span(word, bits);
                    cloud.points.push_back(eval_trc_span(word, p.angle, p.alpha, *p.beta, bits));
                    break;
            }
        },
        budget);
    return cloud;
}

}  // namespace revolve
