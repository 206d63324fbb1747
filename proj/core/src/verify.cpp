#include "revolve/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revolve/format.hpp"

namespace revolve {

namespace {

double norm2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

/// sup over a of inf over b of |a-b|. Skips points that provably cannot
/// raise the running maximum; the result is exact.
double directed_hausdorff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst2 = 0.0;
    for (const Complex& pa : a) {
        double best2 = std::numeric_limits<double>::infinity();
        bool capped = false;
        for (const Complex& pb : b) {
            const double d2 = norm2(pa - pb);
            if (d2 <= worst2) {
                capped = true;
                break;
            }
            best2 = std::min(best2, d2);
        }
        if (!capped && best2 > worst2) {
            worst2 = best2;
        }
    }
    return std::sqrt(worst2);
}

void echo_params(VerifyReport& report, const FamilyParams& p) {
    report.params.emplace_back("alpha", format_complex(p.alpha));
    if (p.beta) {
        report.params.emplace_back("beta", format_complex(*p.beta));
    }
    report.params.emplace_back("theta", p.angle.str());
}

Family must_one_partner(Family f) {
    switch (f) {
        case Family::x: return Family::x1;
        case Family::h: return Family::h1;
        case Family::x2: return Family::x2_1;
        case Family::h2: return Family::h2_1;
        case Family::t: return Family::t1;
        default:
            throw std::invalid_argument("rotation union: family must use the free first-digit policy");
    }
}

}  // namespace

std::string VerifyReport::serialize() const {
    std::string out;
    out += "check=" + check_name + "\n";
    for (const auto& [k, v] : params) {
        out += k + "=" + v + "\n";
    }
    out += "depth=" + std::to_string(depth) + "\n";
    for (const auto& [k, v] : counts) {
        out += k + "=" + v + "\n";
    }
    for (const auto& [k, v] : details) {
        out += k + "=" + v + "\n";
    }
    out += "max_mismatch=" + format_double(max_mismatch) + "\n";
    out += "tolerance=" + format_double(tolerance) + "\n";
    out += std::string("pass=") + (pass ? "true" : "false") + "\n";
    return out;
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("hausdorff: empty cloud");
    }
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
    return hausdorff(std::span<const Complex>(a.points), std::span<const Complex>(b.points));
}

VerifyReport check_set_equation(Family f, const FamilyParams& p, std::size_t depth,
                                double tolerance) {
    if (depth < 1) {
        throw std::invalid_argument("check_set_equation: depth must be >= 1");
    }
    const PointCloud current = make_cloud(f, p, depth);
    const PointCloud previous = make_cloud(f, p, depth - 1);
    const Ifs system = family_ifs(f, p);

    std::vector<Complex> image;
    image.reserve(previous.count() * system.size());
    const bool ternary = family_condition(f) == Condition::trc;
    for (std::size_t i = 0; i < system.size(); ++i) {
        const AffineConjMap& map = system.maps()[i];
        // The all-zero word enumerates first; the beta-translation map of a
        // t family never receives it.
        const std::size_t first = (ternary && i == 2) ? 1 : 0;
        for (std::size_t j = first; j < previous.points.size(); ++j) {
            image.push_back(apply(map, previous.points[j]));
        }
    }

    VerifyReport report;
    report.check_name = "set-equation";
    report.params.emplace_back("family", std::string(family_name(f)));
    echo_params(report, p);
    report.depth = static_cast<long>(depth);
    report.counts.emplace_back("count_depth", std::to_string(current.count()));
    report.counts.emplace_back("count_union", std::to_string(image.size()));
    report.max_mismatch = hausdorff(std::span<const Complex>(current.points), image);
    report.tolerance = tolerance;
    report.pass = report.max_mismatch <= tolerance;
    return report;
}

VerifyReport check_scaling(const FamilyParams& p, std::size_t depth, double tolerance) {
    if (p.alpha == Complex{0.0, 0.0}) {
        throw std::invalid_argument("check_scaling: degenerate parameter alpha = 0");
    }
    const FamilyParams grc_params{p.alpha, std::nullopt, p.angle};
    const PointCloud h1 = make_cloud(Family::h1, grc_params, depth);
    const PointCloud x1 = make_cloud(Family::x1, grc_params, depth);
    // Word-for-word, the x1 term at position m is alpha times the h1 term,
    // so the clouds align index by index.
    double grc_mismatch = 0.0;
    for (std::size_t i = 0; i < h1.points.size(); ++i) {
        grc_mismatch = std::max(grc_mismatch, std::abs(h1.points[i] - x1.points[i] / p.alpha));
    }

    const Complex conj_alpha = std::conj(p.alpha);
    const PointCloud h2 = make_cloud(Family::h2_1, grc_params, depth);
    const PointCloud x2 = make_cloud(Family::x2_1, FamilyParams{conj_alpha, std::nullopt, p.angle}, depth);
    std::vector<Complex> scaled(x2.points.size());
    for (std::size_t i = 0; i < x2.points.size(); ++i) {
        scaled[i] = x2.points[i] / conj_alpha;
    }
    const double src_mismatch = hausdorff(std::span<const Complex>(h2.points), scaled);

    VerifyReport report;
    report.check_name = "scaling";
    echo_params(report, p);
    report.depth = static_cast<long>(depth);
    report.counts.emplace_back("count_h1", std::to_string(h1.count()));
    report.counts.emplace_back("count_h2_1", std::to_string(h2.count()));
    report.details.emplace_back("mismatch_h1_vs_x1", format_double(grc_mismatch));
    report.details.emplace_back("mismatch_h2_1_vs_x2_1", format_double(src_mismatch));
    report.max_mismatch = std::max(grc_mismatch, src_mismatch);
    report.tolerance = tolerance;
    report.pass = report.max_mismatch <= tolerance;
    return report;
}

VerifyReport check_rotation_union(Family f, const FamilyParams& p, std::size_t depth,
                                  double tolerance) {
    const Family pinned = must_one_partner(f);
    const PointCloud free_cloud = make_cloud(f, p, depth);
    const PointCloud pinned_cloud = make_cloud(pinned, p, depth);
    const std::int64_t order = p.angle.order();
    std::vector<Complex> united;
    united.reserve(pinned_cloud.count() * static_cast<std::size_t>(order));
    for (std::int64_t l = 0; l < order; ++l) {
        const Complex rot = p.angle.unit_value(l);
        for (const Complex& z : pinned_cloud.points) {
            united.push_back(rot * z);
        }
    }

    VerifyReport report;
    report.check_name = "rotation-union";
    report.params.emplace_back("family", std::string(family_name(f)));
    echo_params(report, p);
    report.depth = static_cast<long>(depth);
    report.counts.emplace_back("count_free", std::to_string(free_cloud.count()));
    report.counts.emplace_back("count_union", std::to_string(united.size()));
    report.max_mismatch = hausdorff(std::span<const Complex>(free_cloud.points), united);
    report.tolerance = tolerance;
    report.pass = report.max_mismatch <= tolerance;
    return report;
}

VerifyReport check_convergence(Family f, const FamilyParams& p,
                               std::span<const std::size_t> depths) {
    if (depths.size() < 2) {
        throw std::invalid_argument("check_convergence: need at least two depths");
    }
    for (std::size_t i = 1; i < depths.size(); ++i) {
        if (depths[i] <= depths[i - 1]) {
            throw std::invalid_argument("check_convergence: depths must be strictly increasing");
        }
    }

    VerifyReport report;
    report.check_name = "convergence";
    report.params.emplace_back("family", std::string(family_name(f)));
    echo_params(report, p);
    report.depth = static_cast<long>(depths.back());
    report.tolerance = std::abs(p.alpha) + 0.1;

    std::vector<double> distances;
    PointCloud previous = make_cloud(f, p, depths[0]);
    for (std::size_t i = 1; i < depths.size(); ++i) {
        PointCloud next = make_cloud(f, p, depths[i]);
        const double d = hausdorff(previous, next);
        distances.push_back(d);
        report.details.emplace_back(
            "distance_" + std::to_string(depths[i - 1]) + "_" + std::to_string(depths[i]),
            format_double(d));
        previous = std::move(next);
    }
    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < distances.size(); ++i) {
        const double ratio = distances[i] / distances[i - 1];
        worst_ratio = std::max(worst_ratio, ratio);
        report.details.emplace_back("ratio_" + std::to_string(i), format_double(ratio));
    }
    report.max_mismatch = worst_ratio;
    report.pass = worst_ratio <= report.tolerance;
    return report;
}

double cross_representation_bound(const FamilyParams& p, std::size_t seq_depth,
                                  std::size_t ifs_depth) {
    const double a = std::abs(p.alpha);
    double c = 1.0;
    if (p.beta && a > 0.0) {
        c = std::max(1.0, std::abs(*p.beta) / a);
    }
    return c * (std::pow(a, static_cast<double>(seq_depth)) + std::pow(a, static_cast<double>(ifs_depth))) /
           (1.0 - a);
}

VerifyReport check_cross_representation(Family f, const FamilyParams& p, std::size_t seq_depth,
                                        std::size_t ifs_depth, double tolerance) {
    const PointCloud sequence_cloud = make_cloud(f, p, seq_depth);
    const Ifs system = family_ifs(f, p);
    const PointCloud orbit = orbit_depth(system, {0.0, 0.0}, ifs_depth);
    const PointCloud williams = williams_cloud(system, ifs_depth);

    const double seq_vs_orbit = hausdorff(sequence_cloud, orbit);
    // no compositions at depth 0, nothing to compare
    const double williams_vs_orbit = williams.points.empty() ? 0.0 : hausdorff(williams, orbit);

    VerifyReport report;
    report.check_name = "cross-representation";
    report.params.emplace_back("family", std::string(family_name(f)));
    echo_params(report, p);
    report.params.emplace_back("seq_depth", std::to_string(seq_depth));
    report.params.emplace_back("ifs_depth", std::to_string(ifs_depth));
    report.depth = static_cast<long>(seq_depth);
    report.counts.emplace_back("count_sequence", std::to_string(sequence_cloud.count()));
    report.counts.emplace_back("count_orbit", std::to_string(orbit.count()));
    report.counts.emplace_back("count_williams", std::to_string(williams.count()));
    report.details.emplace_back("mismatch_sequence_vs_orbit", format_double(seq_vs_orbit));
    report.details.emplace_back("mismatch_williams_vs_orbit", format_double(williams_vs_orbit));
    report.details.emplace_back("tail_bound",
                                format_double(cross_representation_bound(p, seq_depth, ifs_depth)));
    report.max_mismatch = std::max(seq_vs_orbit, williams_vs_orbit);
    report.tolerance = tolerance;
    report.pass = report.max_mismatch <= tolerance;
    return report;
}

std::vector<RevolvingSequence> filter_words(Condition c, const Angle& angle, std::size_t length,
                                            FirstDigitPolicy policy) {
    const std::int64_t order = angle.order();
    const std::uint64_t radix = static_cast<std::uint64_t>(order) + 1;
    double total = std::pow(static_cast<double>(radix), static_cast<double>(length));
    if (total > 2e8) {
        throw std::runtime_error("filter_words: budget exceeded for length " + std::to_string(length));
    }

    std::vector<RevolvingSequence> out;
    // Odometer over the full digit space, least significant position last so
    // the output shares the enumerator's lexicographic order (0 = zero digit,
    // then exponents in increasing order).
    std::vector<std::uint64_t> codes(length, 0);
    while (true) {
        std::vector<Digit> digits(length);
        for (std::size_t i = 0; i < length; ++i) {
            digits[i] = codes[i] == 0 ? Digit::zero()
                                      : Digit::unit(static_cast<std::int64_t>(codes[i]) - 1, angle);
        }
        RevolvingSequence word(angle, std::move(digits));
        if (validate(word, c, policy)) {
            out.push_back(std::move(word));
        }
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++codes[pos] < radix) {
                break;
            }
            codes[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
        if (length == 0) {
            return out;
        }
    }
}

std::uint64_t filter_count(Condition c, const Angle& angle, std::size_t length,
                           FirstDigitPolicy policy) {
    const std::int64_t order = angle.order();
    const std::uint64_t radix = static_cast<std::uint64_t>(order) + 1;
    double total = std::pow(static_cast<double>(radix), static_cast<double>(length));
    if (total > 2e8) {
        throw std::runtime_error("filter_count: budget exceeded for length " + std::to_string(length));
    }

    // Count valid words with an incremental validator over the odometer: at
    // each position track the last nonzero digit and its parity.
    std::uint64_t count = 0;
    std::vector<std::uint64_t> codes(length, 0);
    std::vector<Digit> digits(length, Digit::zero());
    while (true) {
        bool ok = true;
        std::int64_t last_exponent = 0;
        std::size_t last_position = 0;
        for (std::size_t i = 0; i < length && ok; ++i) {
            if (codes[i] == 0) {
                continue;
            }
            const std::int64_t e = static_cast<std::int64_t>(codes[i]) - 1;
            if (last_position == 0) {
                ok = policy == FirstDigitPolicy::free || e == 0;
            } else {
                std::int64_t cands[2];
                const int n = detail::unit_candidates(c, order, last_exponent, last_position, cands);
                ok = false;
                for (int k = 0; k < n; ++k) {
                    ok = ok || cands[k] == e;
                }
            }
            last_exponent = e;
            last_position = i + 1;
        }
        if (ok) {
            ++count;
        }
        std::size_t pos = length;
        bool rolled = true;
        while (pos > 0) {
            --pos;
            if (++codes[pos] < radix) {
                rolled = false;
                break;
            }
            codes[pos] = 0;
        }
        if (length == 0 || rolled) {
            return count;
        }
    }
}

VerifyReport count_check(Condition c, const Angle& angle, std::span<const std::size_t> lengths) {
    VerifyReport report;
    report.check_name = "counts";
    report.params.emplace_back("condition", c == Condition::grc   ? "grc"
                                            : c == Condition::src ? "src"
                                                                  : "trc");
    report.params.emplace_back("theta", angle.str());

    std::uint64_t disagreements = 0;
    std::size_t max_length = 0;
    for (std::size_t n : lengths) {
        max_length = std::max(max_length, n);
        for (FirstDigitPolicy policy : {FirstDigitPolicy::must_be_one, FirstDigitPolicy::free}) {
            const std::uint64_t enumerated = count_words(c, angle, n, policy);
            const std::uint64_t filtered = filter_count(c, angle, n, policy);
            const char* tag = policy == FirstDigitPolicy::must_be_one ? "one" : "free";
            report.counts.emplace_back("count_" + std::string(tag) + "_" + std::to_string(n),
                                       std::to_string(enumerated));
            if (enumerated != filtered) {
                ++disagreements;
                report.details.emplace_back("filter_" + std::string(tag) + "_" + std::to_string(n),
                                            std::to_string(filtered));
            }
        }
        // Observed closed forms for the pinned-first-digit counts: 2^n for
        // grc/src at every order, (3^n+1)/2 for trc at order >= 2.
        std::uint64_t closed = 0;
        if (c == Condition::trc && angle.order() >= 2) {
            std::uint64_t pow3 = 1;
            for (std::size_t i = 0; i < n; ++i) pow3 *= 3;
            closed = (pow3 + 1) / 2;
        } else {
            closed = std::uint64_t{1} << n;
        }
        report.details.emplace_back("closed_form_one_" + std::to_string(n), std::to_string(closed));
        if (closed != count_words(c, angle, n, FirstDigitPolicy::must_be_one)) {
            ++disagreements;
        }
    }
    report.depth = static_cast<long>(max_length);
    report.max_mismatch = static_cast<double>(disagreements);
    report.tolerance = 0.0;
    report.pass = disagreements == 0;
    return report;
}

}  // namespace revolve
