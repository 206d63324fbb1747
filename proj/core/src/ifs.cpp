#include "revolve/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "revolve/format.hpp"

namespace revolve {

Complex apply(const AffineConjMap& m, Complex z) {
    return m.a * (m.conj ? std::conj(z) : z) + m.c;
}

AffineConjMap compose(const AffineConjMap& m1, const AffineConjMap& m2) {
    const Complex a2 = m1.conj ? std::conj(m2.a) : m2.a;
    const Complex c2 = m1.conj ? std::conj(m2.c) : m2.c;
    return {m1.a * a2, m1.a * c2 + m1.c, m1.conj != m2.conj};
}

Complex fixed_point(const AffineConjMap& m) {
    if (std::abs(m.a) >= 1.0) {
        throw std::invalid_argument("fixed_point: map is not a contraction, no unique fixed point");
    }
    if (!m.conj) {
        return m.c / (Complex{1.0, 0.0} - m.a);
    }
    // z = a*conj(z) + c as a real 2x2 system in (Re z, Im z):
    //   (1-p) x -    q  y = r
    //     -q  x + (1+p) y = s
    const double p = m.a.real(), q = m.a.imag();
    const double r = m.c.real(), s = m.c.imag();
    const double det = 1.0 - p * p - q * q;  // > 0 for a contraction
    return {(r * (1.0 + p) + q * s) / det, (s * (1.0 - p) + q * r) / det};
}

Ifs::Ifs(std::vector<AffineConjMap> maps, std::string label)
    : maps_(std::move(maps)), label_(std::move(label)) {
    if (maps_.empty()) {
        throw std::invalid_argument("Ifs: need at least one map");
    }
    for (const AffineConjMap& m : maps_) {
        if (std::abs(m.a) >= 1.0) {
            throw std::invalid_argument("Ifs: every map must be a contraction (|a| < 1)");
        }
    }
}

PresetName parse_preset(std::string_view name) {
    if (name == "levy") return PresetName::levy;
    if (name == "tiling") return PresetName::tiling;
    if (name == "heighway") return PresetName::heighway;
    if (name == "twindragon") return PresetName::twindragon;
    if (name == "terdragon") return PresetName::terdragon;
    throw std::invalid_argument("unknown preset \"" + std::string(name) + "\"");
}

std::string_view preset_label(PresetName p) {
    switch (p) {
        case PresetName::levy: return "levy";
        case PresetName::tiling: return "tiling";
        case PresetName::heighway: return "heighway";
        case PresetName::twindragon: return "twindragon";
        case PresetName::terdragon: return "terdragon";
    }
    throw std::logic_error("preset_label: unreachable");
}

std::pair<Family, FamilyParams> preset_family(PresetName p) {
    switch (p) {
        case PresetName::levy:
            return {Family::x1, {{0.5, -0.5}, std::nullopt, Angle::from_fraction(1, 4, 1)}};
        case PresetName::tiling:
            return {Family::x1, {{0.5, -0.5}, std::nullopt, Angle::from_fraction(1, 4, -1)}};
        case PresetName::heighway:
            return {Family::h1, {{0.5, 0.5}, std::nullopt, Angle::from_fraction(1, 4, 1)}};
        case PresetName::twindragon:
            return {Family::h1, {{0.5, 0.5}, std::nullopt, Angle::from_fraction(1, 2, 1)}};
        case PresetName::terdragon: {
            const Complex alpha{0.5, -std::sqrt(3.0) / 6.0};
            return {Family::t1, {alpha, std::conj(alpha), Angle::from_fraction(1, 3, 1)}};
        }
    }
    throw std::logic_error("preset_family: unreachable");
}

Ifs preset(PresetName p) {
    const auto [family, params] = preset_family(p);
    Ifs system = family_ifs(family, params);
    return Ifs(std::vector<AffineConjMap>(system.maps().begin(), system.maps().end()),
               std::string(preset_label(p)));
}

Ifs family_ifs(Family f, const FamilyParams& p) {
    validate_family_params(f, p);
    const Complex alpha = p.alpha;
    const Complex rotated = alpha * p.angle.unit_value(1);
    std::vector<AffineConjMap> maps;
    switch (f) {
        case Family::x1:
        case Family::x:
            maps = {{alpha, {0.0, 0.0}, false}, {rotated, alpha, false}};
            break;
        case Family::h1:
        case Family::h:
            maps = {{alpha, {0.0, 0.0}, false}, {rotated, {1.0, 0.0}, false}};
            break;
        case Family::x2_1:
        case Family::x2:
            maps = {{alpha, {0.0, 0.0}, true}, {rotated, alpha, true}};
            break;
        case Family::h2_1:
        case Family::h2:
            maps = {{alpha, {0.0, 0.0}, true}, {rotated, {1.0, 0.0}, true}};
            break;
        case Family::t1:
        case Family::t:
            maps = {{alpha, {0.0, 0.0}, false}, {rotated, alpha, false}, {alpha, *p.beta, false}};
            break;
    }
    return Ifs(std::move(maps), std::string(family_name(f)));
}

PointCloud orbit_depth(const Ifs& f, Complex seed, std::size_t depth, std::size_t budget) {
    const std::size_t m = f.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        if (total > budget / m) {
            throw std::runtime_error("orbit_depth: budget exceeded at depth " + std::to_string(depth));
        }
        total *= m;
    }

    PointCloud cloud;
    cloud.source = "orbit:" + f.label();
    cloud.depth = static_cast<long>(depth);
    cloud.params.emplace_back("seed", format_complex(seed));

    // Level-by-level image, prepending the map index keeps address order.
    std::vector<Complex> current{seed};
    std::vector<Complex> next;
    for (std::size_t level = 0; level < depth; ++level) {
        next.clear();
        next.reserve(current.size() * m);
        for (const AffineConjMap& map : f.maps()) {
            for (const Complex& z : current) {
                next.push_back(apply(map, z));
            }
        }
        current.swap(next);
    }
    cloud.points = std::move(current);
    return cloud;
}

PointCloud williams_cloud(const Ifs& f, std::size_t depth, std::size_t budget,
                          double dedup_tolerance) {
    const std::size_t m = f.size();
    std::size_t total = 0;
    std::size_t level_count = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        if (level_count > (budget - total) / m) {
            throw std::runtime_error("williams_cloud: budget exceeded at depth " + std::to_string(depth));
        }
        level_count *= m;
        total += level_count;
    }

    std::vector<Complex> raw;
    raw.reserve(total);
    std::vector<AffineConjMap> level;
    std::vector<AffineConjMap> next;
    for (std::size_t len = 1; len <= depth; ++len) {
        next.clear();
        if (len == 1) {
            next.assign(f.maps().begin(), f.maps().end());
        } else {
            next.reserve(level.size() * m);
            for (const AffineConjMap& prefix : level) {
                for (const AffineConjMap& map : f.maps()) {
                    next.push_back(compose(prefix, map));
                }
            }
        }
        for (const AffineConjMap& comp : next) {
            raw.push_back(fixed_point(comp));
        }
        level.swap(next);
    }

    // Drop near-duplicates (shared fixed points such as 0 recur verbatim),
    // keeping the earliest occurrence. Sort by real part so only a narrow
    // window needs pairwise checks.
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (raw[i].real() != raw[j].real()) return raw[i].real() < raw[j].real();
        if (raw[i].imag() != raw[j].imag()) return raw[i].imag() < raw[j].imag();
        return i < j;
    });
    std::vector<bool> duplicate(raw.size(), false);
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (raw[order[b]].real() - raw[order[a]].real() > dedup_tolerance) {
                break;
            }
            if (std::abs(raw[order[a]] - raw[order[b]]) <= dedup_tolerance) {
                duplicate[std::max(order[a], order[b])] = true;
            }
        }
    }

    PointCloud cloud;
    cloud.source = "williams:" + f.label();
    cloud.depth = static_cast<long>(depth);
    cloud.params.emplace_back("dedup_tolerance", format_double(dedup_tolerance));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!duplicate[i]) {
            cloud.points.push_back(raw[i]);
        }
    }
    return cloud;
}

PointCloud chaos_game(const Ifs& f, std::uint64_t iterations, std::uint64_t rng_seed,
                      std::uint64_t burn_in) {
    if (iterations <= burn_in) {
        throw std::invalid_argument("chaos_game: iterations must exceed burn_in");
    }
    std::mt19937_64 rng(rng_seed);
    const std::uint64_t m = f.size();

    PointCloud cloud;
    cloud.source = "chaos:" + f.label();
    cloud.depth = 0;
    cloud.params.emplace_back("iterations", std::to_string(iterations));
    cloud.params.emplace_back("rng_seed", std::to_string(rng_seed));
    cloud.params.emplace_back("burn_in", std::to_string(burn_in));
    cloud.points.reserve(iterations - burn_in);

    Complex z{0.0, 0.0};
    for (std::uint64_t i = 0; i < iterations; ++i) {
        const auto& map = f.maps()[static_cast<std::size_t>(rng() % m)];
        z = apply(map, z);
        if (i >= burn_in) {
            cloud.points.push_back(z);
        }
    }
    return cloud;
}

Ifs parse_ifs(std::string_view text, std::string label) {
    std::vector<AffineConjMap> maps;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        ++line_no;
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t fs = 0;
        while (true) {
            std::size_t comma = line.find(',', fs);
            fields.push_back(line.substr(fs, comma == std::string_view::npos ? comma : comma - fs));
            if (comma == std::string_view::npos) break;
            fs = comma + 1;
        }
        if (fields.size() != 5) {
            throw std::runtime_error("parse_ifs: line " + std::to_string(line_no) +
                                     ": expected a_re,a_im,c_re,c_im,conj");
        }
        AffineConjMap m;
        try {
            m.a = {parse_double(fields[0]), parse_double(fields[1])};
            m.c = {parse_double(fields[2]), parse_double(fields[3])};
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("parse_ifs: line " + std::to_string(line_no) + ": " + e.what());
        }
        if (fields[4] == "0" || fields[4] == "false") {
            m.conj = false;
        } else if (fields[4] == "1" || fields[4] == "true") {
            m.conj = true;
        } else {
            throw std::runtime_error("parse_ifs: line " + std::to_string(line_no) +
                                     ": conj flag must be 0 or 1");
        }
        maps.push_back(m);
    }
    return Ifs(std::move(maps), std::move(label));
}

std::string format_ifs(const Ifs& f) {
    std::string out;
    for (const AffineConjMap& m : f.maps()) {
        out += format_double(m.a.real()) + "," + format_double(m.a.imag()) + "," +
               format_double(m.c.real()) + "," + format_double(m.c.imag()) + "," +
               (m.conj ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace revolve
