#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revolve/ifs.hpp"
#include "revolve/series.hpp"

namespace revolve {

/// Outcome of one identity check. pass holds exactly when
/// max_mismatch <= tolerance. serialize() renders stable key=value lines so
/// reports can be diffed and golden-tested.
struct VerifyReport {
    std::string check_name;
    long depth = 0;
    double max_mismatch = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> params;   // echo of inputs
    std::vector<std::pair<std::string, std::string>> counts;   // cloud sizes
    std::vector<std::pair<std::string, std::string>> details;  // per-check measurements

    std::string serialize() const;
};

/// Symmetric brute-force Hausdorff distance
/// max(sup_a inf_b |a-b|, sup_b inf_a |a-b|). Throws std::invalid_argument
/// on an empty cloud.
double hausdorff(std::span<const Complex> a, std::span<const Complex> b);
double hausdorff(const PointCloud& a, const PointCloud& b);

/// Compares the depth-n family cloud against the union of the family's own
/// maps applied to the depth-(n-1) cloud. For the subscript-1 families the
/// two sides are related by an exact word-level bijection, so the mismatch
/// is pure rounding. For the three-map t families the translation-by-beta
/// map pairs only with words containing a nonzero digit, so the all-zero
/// word (always first in enumeration order) is excluded from its image.
VerifyReport check_set_equation(Family f, const FamilyParams& p, std::size_t depth,
                                double tolerance);

/// Verifies both scaling identities at finite depth: the h1 cloud equals the
/// x1 cloud divided by alpha (position-wise), and the h2_1 cloud at alpha
/// equals the x2_1 cloud at conj(alpha) divided by conj(alpha) (as sets).
VerifyReport check_scaling(const FamilyParams& p, std::size_t depth, double tolerance);

/// Set-compares a free-policy family cloud against the union of rotated
/// copies e^{il*theta} of its pinned-first-digit counterpart.
VerifyReport check_rotation_union(Family f, const FamilyParams& p, std::size_t depth,
                                  double tolerance);

/// Hausdorff distances between clouds at consecutive listed depths must
/// shrink geometrically: every ratio d_{k+1}/d_k must stay at or below
/// |alpha| + 0.1.
VerifyReport check_convergence(Family f, const FamilyParams& p,
                               std::span<const std::size_t> depths);

/// Worst-case tail estimate used as context for cross-representation
/// comparisons: C * (|alpha|^n + |alpha|^m) / (1 - |alpha|) where C accounts
/// for a |beta/alpha| factor when beta is present.
double cross_representation_bound(const FamilyParams& p, std::size_t seq_depth,
                                  std::size_t ifs_depth);

/// Compares the sequence-side cloud with the IFS orbit of the family's own
/// system (seed 0), and the Williams fixed-point cloud with the same orbit.
VerifyReport check_cross_representation(Family f, const FamilyParams& p, std::size_t seq_depth,
                                        std::size_t ifs_depth, double tolerance);

/// Checks the pruning enumerator against an exhaustive filter of the full
/// digit space for each listed length, and records the observed closed-form
/// counts for the pinned-first-digit words.
VerifyReport count_check(Condition c, const Angle& angle, std::span<const std::size_t> lengths);

/// Exhaustive-filter oracle: every word in Delta^length that validates.
/// Independent of the pruning enumerator; cost (order+1)^length.
std::vector<RevolvingSequence> filter_words(Condition c, const Angle& angle, std::size_t length,
                                            FirstDigitPolicy policy);
std::uint64_t filter_count(Condition c, const Angle& angle, std::size_t length,
                           FirstDigitPolicy policy);

}  // namespace revolve
