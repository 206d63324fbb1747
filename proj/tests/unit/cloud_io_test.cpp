#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "revolve/cloud_io.hpp"

namespace {

using revolve::Complex;
using revolve::PointCloud;
using revolve::RenderMode;
using revolve::Viewport;

PointCloud sample_cloud() {
    PointCloud c;
    c.source = "x1";
    c.depth = 3;
    c.params = {{"alpha", "0.5,-0.5"}, {"theta", "1/4"}};
    c.points = {{0.0, 0.0}, {0.75, -0.75}, {0.5, -0.5}};
    return c;
}

TEST_CASE("format_double canonical forms") {
    CHECK(revolve::format_double(0.0) == "0");
    CHECK(revolve::format_double(-0.0) == "0");
    CHECK(revolve::format_double(0.5) == "0.5");
    // 17 significant digits round-trip any double
    const double v = 0.28867513459481287;
    CHECK(revolve::parse_double(revolve::format_double(v)) == v);
    CHECK(revolve::format_complex({0.0, 0.0}) == "0,0");
    CHECK_THROWS_AS(revolve::parse_double("abc"), std::invalid_argument);
    CHECK_THROWS_AS(revolve::parse_complex("1.0"), std::invalid_argument);
}

TEST_CASE("csv writes header then points") {
    const std::string text = write_csv(sample_cloud());
    CHECK(text == "# source=x1\n"
                  "# alpha=0.5,-0.5\n"
                  "# theta=1/4\n"
                  "# depth=3\n"
                  "# count=3\n"
                  "0,0\n"
                  "0.75,-0.75\n"
                  "0.5,-0.5\n");

    PointCloud empty;
    empty.source = "empty";
    const std::string empty_text = write_csv(empty);
    for (const char* line : {"# source=empty", "# count=0"}) {
        CHECK(empty_text.find(line) != std::string::npos);
    }
    CHECK(empty_text.find("\n0") == std::string::npos);  // header only
}

TEST_CASE("csv round trip restores points and metadata") {
    const PointCloud original = sample_cloud();
    std::istringstream in(write_csv(original));
    const PointCloud back = revolve::read_csv(in);
    CHECK(back.source == original.source);
    CHECK(back.depth == original.depth);
    CHECK(back.params == original.params);
    REQUIRE(back.points.size() == original.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i) {
        CHECK(back.points[i].real() == original.points[i].real());
        CHECK(back.points[i].imag() == original.points[i].imag());
    }
}

TEST_CASE("csv round trip is exact on random doubles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    PointCloud c;
    c.source = "random";
    for (int i = 0; i < 200; ++i) {
        c.points.emplace_back(coord(rng), coord(rng));
    }
    c.points.emplace_back(1e-300, 1e300);
    c.points.emplace_back(std::sqrt(2.0), -std::sqrt(3.0));
    std::istringstream in(write_csv(c));
    const PointCloud back = revolve::read_csv(in);
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        CHECK(back.points[i].real() == c.points[i].real());
        CHECK(back.points[i].imag() == c.points[i].imag());
    }
}

TEST_CASE("csv parse errors carry line numbers") {
    std::istringstream bad("# source=x\n0,0\nnot-a-point\n");
    CHECK_THROWS_WITH_AS(revolve::read_csv(bad), doctest::Contains("line 3"), std::runtime_error);

    std::istringstream mismatch("# count=5\n0,0\n");
    CHECK_THROWS_WITH_AS(revolve::read_csv(mismatch), doctest::Contains("count"), std::runtime_error);
}

TEST_CASE("render: single point in a 3x3 viewport") {
    PointCloud c;
    c.points = {{0.0, 0.0}};
    const Viewport v{-1.5, 1.5, -1.5, 1.5, 3, 3};
    const std::string pgm = render_pgm(c, v, RenderMode::binary);
    CHECK(pgm == "P2\n3 3\n255\n0 0 0\n0 255 0\n0 0 0\n");
    // determinism
    CHECK(render_pgm(c, v, RenderMode::binary) == pgm);
}

TEST_CASE("render: log density scales with counts") {
    PointCloud c;
    c.points = {{-1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    const Viewport v{-1.5, 1.5, -0.5, 0.5, 3, 1};
    const std::string pgm = render_pgm(c, v, RenderMode::log_density);
    // densest pixel saturates at 255; the single-hit pixel scales by
    // log(2)/log(3): round(255 * 0.63093) = 161
    CHECK(pgm == "P2\n3 1\n255\n161 0 255\n");
}

TEST_CASE("render clips points outside the viewport") {
    PointCloud c;
    c.points = {{0.0, 0.0}, {10.0, 10.0}};
    const Viewport v{-1.0, 1.0, -1.0, 1.0, 1, 1};
    CHECK(render_pgm(c, v, RenderMode::binary) == "P2\n1 1\n255\n255\n");
}

TEST_CASE("render rejects degenerate viewports") {
    PointCloud c;
    c.points = {{0.0, 0.0}};
    CHECK_THROWS_AS(render_pgm(c, {1.0, 1.0, -1.0, 1.0, 3, 3}, RenderMode::binary),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_pgm(c, {-1.0, 1.0, -1.0, 1.0, 0, 3}, RenderMode::binary),
                    std::invalid_argument);
}

TEST_CASE("auto viewport pads the bounding box") {
    PointCloud c;
    c.points = {{0.0, 0.0}, {2.0, 4.0}};
    const Viewport v = revolve::auto_viewport(c, 100, 50);
    CHECK(v.min_re == doctest::Approx(-0.1));
    CHECK(v.max_re == doctest::Approx(2.1));
    CHECK(v.min_im == doctest::Approx(-0.2));
    CHECK(v.max_im == doctest::Approx(4.2));
    CHECK(v.width == 100);
    CHECK(v.height == 50);

    PointCloud single;
    single.points = {{1.0, 1.0}};
    const Viewport s = revolve::auto_viewport(single, 10, 10);
    CHECK(s.min_re == doctest::Approx(0.5));
    CHECK(s.max_re == doctest::Approx(1.5));

    CHECK_THROWS_AS(revolve::auto_viewport(PointCloud{}, 10, 10), std::invalid_argument);
}

TEST_CASE("pgm lines stay within 70 characters") {
    PointCloud c;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int i = 0; i < 3000; ++i) {
        c.points.emplace_back(coord(rng), coord(rng));
    }
    const std::string pgm = render_pgm(c, {-1.0, 1.0, -1.0, 1.0, 64, 64}, RenderMode::log_density);
    std::istringstream lines(pgm);
    std::string line;
    while (std::getline(lines, line)) {
        CHECK(line.size() <= 70);
    }
}

}  // namespace
