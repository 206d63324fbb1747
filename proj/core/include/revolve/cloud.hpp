#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "revolve/alphabet.hpp"

namespace revolve {

/// A finite list of complex points plus generation metadata. Point order is
/// part of the contract: generators emit in a deterministic order, so equal
/// inputs produce byte-identical serializations.
struct PointCloud {
    std::vector<Complex> points;
    std::string source;  // e.g. "x1", "orbit:levy", "chaos:custom"
    long depth = 0;
    /// Echoed generation parameters, insertion-ordered.
    std::vector<std::pair<std::string, std::string>> params;

    std::size_t count() const { return points.size(); }
};

}  // namespace revolve
