#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revolve/cloud.hpp"
#include "revolve/series.hpp"

namespace revolve {

/// Planar similarity z -> a*z + c, optionally conjugating the argument first
/// (z -> a*conj(z) + c). Conjugation is a flag rather than a separate type
/// because compositions mix the two kinds.
struct AffineConjMap {
    Complex a;
    Complex c;
    bool conj = false;

    friend bool operator==(const AffineConjMap&, const AffineConjMap&) = default;
};

Complex apply(const AffineConjMap& m, Complex z);

/// The map z -> m1(m2(z)).
AffineConjMap compose(const AffineConjMap& m1, const AffineConjMap& m2);

/// Unique fixed point of a contraction: c/(1-a) for a plain map, the
/// solution of the equivalent 2x2 real system for a conjugating map.
/// Throws std::invalid_argument when |a| >= 1.
Complex fixed_point(const AffineConjMap& m);

/// A nonempty list of contractions. Construction rejects empty systems and
/// maps with |a| >= 1.
class Ifs {
public:
    Ifs(std::vector<AffineConjMap> maps, std::string label);

    std::span<const AffineConjMap> maps() const { return maps_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return maps_.size(); }

private:
    std::vector<AffineConjMap> maps_;
    std::string label_;
};

enum class PresetName { levy, tiling, heighway, twindragon, terdragon };

PresetName parse_preset(std::string_view name);
std::string_view preset_label(PresetName p);

/// The named two- and three-map dragon systems with their classical
/// parameters.
Ifs preset(PresetName p);

/// The parametrized point family matching each preset, with the same
/// parameters the preset maps use.
std::pair<Family, FamilyParams> preset_family(PresetName p);

/// The iterated function system owned by a family: the x families pair a
/// scaling with a rotate-and-shift by alpha, the h families shift by 1, the
/// "2" families conjugate the argument, and the t families add a third map
/// translating by beta.
Ifs family_ifs(Family f, const FamilyParams& p);

inline constexpr std::size_t kDefaultIfsBudget = 1594323;  // 3^13

/// All m^depth values (psi_{i1} o ... o psi_{i_depth})(seed) in address
/// order with i1 most significant. Throws std::runtime_error when m^depth
/// exceeds the budget.
PointCloud orbit_depth(const Ifs& f, Complex seed, std::size_t depth,
                       std::size_t budget = kDefaultIfsBudget);

/// Fixed points of every composition of length 1..depth, generated by
/// increasing length then address order, deduplicated within the given
/// tolerance (first occurrence kept).
PointCloud williams_cloud(const Ifs& f, std::size_t depth, std::size_t budget = kDefaultIfsBudget,
                          double dedup_tolerance = 1e-12);

/// Random-iteration approximation: starting from z = 0, repeatedly applies a
/// uniformly chosen map (mt19937_64 stream reduced modulo the map count) and
/// records every visited point after the first `burn_in`. Reproducible for a
/// fixed seed. Requires iterations > burn_in.
PointCloud chaos_game(const Ifs& f, std::uint64_t iterations, std::uint64_t rng_seed,
                      std::uint64_t burn_in);

/// Custom system textual form: one map per line, "a_re,a_im,c_re,c_im,conj"
/// with conj in {0,1}. Blank lines and lines starting with '#' are skipped.
Ifs parse_ifs(std::string_view text, std::string label = "custom");
std::string format_ifs(const Ifs& f);

}  // namespace revolve
