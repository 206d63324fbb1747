#include "revolve/cloud_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace revolve {

void write_csv(const PointCloud& cloud, std::ostream& out) {
    out << "# source=" << cloud.source << "\n";
    for (const auto& [k, v] : cloud.params) {
        out << "# " << k << "=" << v << "\n";
    }
    out << "# depth=" << cloud.depth << "\n";
    out << "# count=" << cloud.points.size() << "\n";
    for (const Complex& z : cloud.points) {
        out << format_complex(z) << "\n";
    }
}

std::string write_csv(const PointCloud& cloud) {
    std::ostringstream out;
    write_csv(cloud, out);
    return out.str();
}

void write_csv_file(const PointCloud& cloud, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_csv(cloud, out);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

PointCloud read_csv(std::istream& in) {
    PointCloud cloud;
    std::optional<std::size_t> declared_count;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::string_view body(line);
            body.remove_prefix(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            const std::size_t eq = body.find('=');
            if (eq == std::string_view::npos) {
                continue;  // free-form comment
            }
            const std::string key(body.substr(0, eq));
            const std::string value(body.substr(eq + 1));
            if (key == "source") {
                cloud.source = value;
            } else if (key == "depth") {
                try {
                    cloud.depth = std::stol(value);
                } catch (const std::exception&) {
                    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad depth \"" +
                                             value + "\"");
                }
            } else if (key == "count") {
                try {
                    declared_count = static_cast<std::size_t>(std::stoull(value));
                } catch (const std::exception&) {
                    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad count \"" +
                                             value + "\"");
                }
            } else {
                cloud.params.emplace_back(key, value);
            }
            continue;
        }
        try {
            cloud.points.push_back(parse_complex(line));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (declared_count && *declared_count != cloud.points.size()) {
        throw std::runtime_error("csv: declared count " + std::to_string(*declared_count) +
                                 " but found " + std::to_string(cloud.points.size()) + " points");
    }
    return cloud;
}

PointCloud read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_csv(in);
}

Viewport auto_viewport(const PointCloud& cloud, std::size_t width, std::size_t height) {
    if (cloud.points.empty()) {
        throw std::invalid_argument("auto_viewport: empty cloud");
    }
    double min_re = cloud.points.front().real(), max_re = min_re;
    double min_im = cloud.points.front().imag(), max_im = min_im;
    for (const Complex& z : cloud.points) {
        min_re = std::min(min_re, z.real());
        max_re = std::max(max_re, z.real());
        min_im = std::min(min_im, z.imag());
        max_im = std::max(max_im, z.imag());
    }
    const double pad_re = max_re > min_re ? 0.05 * (max_re - min_re) : 0.5;
    const double pad_im = max_im > min_im ? 0.05 * (max_im - min_im) : 0.5;
    return {min_re - pad_re, max_re + pad_re, min_im - pad_im, max_im + pad_im, width, height};
}

std::string render_pgm(const PointCloud& cloud, const Viewport& v, RenderMode mode) {
    if (!(v.max_re > v.min_re) || !(v.max_im > v.min_im) || v.width == 0 || v.height == 0) {
        throw std::invalid_argument("render_pgm: degenerate viewport");
    }
    std::vector<std::uint32_t> counts(v.width * v.height, 0);
    const double scale_x = static_cast<double>(v.width) / (v.max_re - v.min_re);
    const double scale_y = static_cast<double>(v.height) / (v.max_im - v.min_im);
    std::uint32_t max_count = 0;
    for (const Complex& z : cloud.points) {
        if (z.real() < v.min_re || z.real() > v.max_re || z.imag() < v.min_im || z.imag() > v.max_im) {
            continue;
        }
        std::size_t col = static_cast<std::size_t>((z.real() - v.min_re) * scale_x);
        std::size_t row = static_cast<std::size_t>((v.max_im - z.imag()) * scale_y);
        col = std::min(col, v.width - 1);
        row = std::min(row, v.height - 1);
        const std::uint32_t c = ++counts[row * v.width + col];
        max_count = std::max(max_count, c);
    }

    std::string out;
    out += "P2\n";
    out += std::to_string(v.width) + " " + std::to_string(v.height) + "\n";
    out += "255\n";
    const double log_max = max_count > 0 ? std::log1p(static_cast<double>(max_count)) : 1.0;
    std::string line;
    for (std::size_t row = 0; row < v.height; ++row) {
        line.clear();
        for (std::size_t col = 0; col < v.width; ++col) {
            const std::uint32_t c = counts[row * v.width + col];
            int value = 0;
            if (c > 0) {
                value = mode == RenderMode::binary
                            ? 255
                            : static_cast<int>(
                                  std::lround(255.0 * std::log1p(static_cast<double>(c)) / log_max));
            }
            const std::string token = std::to_string(value);
            // keep plain-PGM lines within the customary 70 characters
            if (!line.empty() && line.size() + 1 + token.size() > 70) {
                out += line;
                out += "\n";
                line.clear();
            }
            if (!line.empty()) {
                line += ' ';
            }
            line += token;
        }
        if (!line.empty()) {
            out += line;
            out += "\n";
        }
    }
    return out;
}

}  // namespace revolve
