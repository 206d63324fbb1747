#pragma once

#include <optional>
#include <string_view>

#include "revolve/cloud.hpp"
#include "revolve/sequence.hpp"

namespace revolve {

/// The ten parametrized point families. Naming: x/h distinguishes whether
/// the series starts at exponent 1 or 0; the "2" families use the
/// alternating-conjugate product; t families carry the binary-static-sequence
/// correction. The _1 suffix pins the first nonzero digit to 1.
enum class Family { x1, x, h1, h, x2_1, x2, h2_1, h2, t1, t };

struct FamilyParams {
    Complex alpha;
    std::optional<Complex> beta;  // t families only
    Angle angle;
};

Condition family_condition(Family f);
FirstDigitPolicy family_policy(Family f);

/// Series start index: word position m contributes exponent m-1+start.
int family_start_index(Family f);

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Throws std::invalid_argument unless |alpha| < 1, beta is present exactly
/// when the family needs it, and |beta| < 1 when present.
void validate_family_params(Family f, const FamilyParams& p);

/// Sum of digit_value(d_m) * alpha^(m-1+start) over the word.
Complex eval_grc_series(const RevolvingSequence& s, Complex alpha, int start);

/// Alternating-conjugate series: with eta_j = alpha for odd j and
/// conj(alpha) for even j, position m contributes
/// digit_value(d_m) * prod(eta_1..eta_m) when start = 1, and
/// digit_value(d_m) * prod(eta_1..eta_{m-1}) when start = 0 (the first
/// position carries the empty product).
Complex eval_src_series(const RevolvingSequence& s, Complex alpha, int start);

/// Ternary series with the BSS correction: position m contributes
/// digit_value(d_m) * alpha^m, except that a bit value of 1 swaps one factor
/// of alpha for beta (d_m * alpha^{m-1} * beta). The word must satisfy the
/// ternary condition; alpha must be nonzero.
Complex eval_trc_series(const RevolvingSequence& s, Complex alpha, Complex beta);

/// Dispatches to the family's series with its start index and parameters.
Complex eval_family_series(Family f, const FamilyParams& p, const RevolvingSequence& s);

/// Enumerates every valid word of length `depth` for the family's condition
/// and policy and evaluates the family series, in enumeration order.
PointCloud make_cloud(Family f, const FamilyParams& p, std::size_t depth,
                      const EnumerationBudget& budget = {});

}  // namespace revolve
