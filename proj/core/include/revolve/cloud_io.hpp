#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "revolve/cloud.hpp"
#include "revolve/format.hpp"

namespace revolve {

/// CSV form of a cloud: '#'-prefixed key=value header lines carrying the
/// metadata, then one "re,im" line per point with 17 significant digits
/// (lossless double round trip). Byte-deterministic.
void write_csv(const PointCloud& cloud, std::ostream& out);
std::string write_csv(const PointCloud& cloud);
void write_csv_file(const PointCloud& cloud, const std::filesystem::path& path);

/// Inverse of write_csv; metadata is restored when header lines are present.
/// Throws std::runtime_error naming the offending line on malformed input.
PointCloud read_csv(std::istream& in);
PointCloud read_csv_file(const std::filesystem::path& path);

struct Viewport {
    double min_re = 0.0;
    double max_re = 1.0;
    double min_im = 0.0;
    double max_im = 1.0;
    std::size_t width = 256;
    std::size_t height = 256;
};

/// Bounding box of the cloud expanded by 5% per side; a zero-extent axis is
/// padded by 0.5 on each side instead. Throws on an empty cloud.
Viewport auto_viewport(const PointCloud& cloud, std::size_t width, std::size_t height);

enum class RenderMode { binary, log_density };

/// Plain-text PGM (magic "P2", maxval 255), top row at max_im. binary marks
/// any pixel containing at least one point; log_density scales by
/// log(1+count). Points outside the viewport are clipped. Byte-deterministic.
/// Throws std::invalid_argument on a degenerate viewport.
std::string render_pgm(const PointCloud& cloud, const Viewport& viewport, RenderMode mode);

}  // namespace revolve
