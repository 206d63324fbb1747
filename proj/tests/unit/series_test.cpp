#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "revolve/series.hpp"

namespace {

using revolve::Angle;
using revolve::Complex;
using revolve::Condition;
using revolve::Digit;
using revolve::Family;
using revolve::FamilyParams;
using revolve::FirstDigitPolicy;
using revolve::PointCloud;
using revolve::RevolvingSequence;

const Angle kQuarter = Angle::from_fraction(1, 4, 1);
const Angle kThird = Angle::from_fraction(1, 3, 1);
const Complex kLevyAlpha{0.5, -0.5};
const Complex kTerAlpha{0.5, -std::sqrt(3.0) / 6.0};
const Complex kTerBeta{0.5, std::sqrt(3.0) / 6.0};

RevolvingSequence word(const Angle& a, std::initializer_list<int> exps) {
    std::vector<Digit> digits;
    for (int e : exps) {
        digits.push_back(e < 0 ? Digit::zero() : Digit::unit(e, a));
    }
    return RevolvingSequence(a, std::move(digits));
}

FamilyParams terdragon_params() { return {kTerAlpha, kTerBeta, kThird}; }

TEST_CASE("family traits") {
    CHECK(family_condition(Family::x1) == Condition::grc);
    CHECK(family_condition(Family::h2) == Condition::src);
    CHECK(family_condition(Family::t) == Condition::trc);
    CHECK(family_policy(Family::x1) == FirstDigitPolicy::must_be_one);
    CHECK(family_policy(Family::x) == FirstDigitPolicy::free);
    CHECK(family_start_index(Family::h1) == 0);
    CHECK(family_start_index(Family::h2) == 0);
    CHECK(family_start_index(Family::x2_1) == 1);
    CHECK(family_start_index(Family::t1) == 1);
    for (Family f : {Family::x1, Family::x, Family::h1, Family::h, Family::x2_1, Family::x2,
                     Family::h2_1, Family::h2, Family::t1, Family::t}) {
        CHECK(revolve::parse_family(family_name(f)) == f);
    }
    CHECK_THROWS_AS(revolve::parse_family("nope"), std::invalid_argument);
}

TEST_CASE("eval_grc_series") {
    CHECK(eval_grc_series(word(kQuarter, {-1, -1, -1}), kLevyAlpha, 1) == Complex{0.0, 0.0});
    CHECK(eval_grc_series(word(kQuarter, {0}), kLevyAlpha, 1) == kLevyAlpha);
    // direct polynomial oracle: alpha + i*alpha^3
    const Complex expected = kLevyAlpha + Complex{0.0, 1.0} * kLevyAlpha * kLevyAlpha * kLevyAlpha;
    const Complex got = eval_grc_series(word(kQuarter, {0, -1, 1}), kLevyAlpha, 1);
    CHECK(std::abs(got - expected) == 0.0);
    CHECK(got == Complex{0.75, -0.75});
    // start 0 drops one power of alpha
    CHECK(eval_grc_series(word(kQuarter, {0}), kLevyAlpha, 0) == Complex{1.0, 0.0});
    CHECK_THROWS_AS(eval_grc_series(word(kQuarter, {0}), kLevyAlpha, 2), std::invalid_argument);
}

TEST_CASE("eval_src_series") {
    const Complex alpha{0.5, std::sqrt(3.0) / 6.0};
    CHECK(eval_src_series(word(kQuarter, {0}), alpha, 1) == alpha);
    CHECK(eval_src_series(word(kQuarter, {0}), alpha, 0) == Complex{1.0, 0.0});
    // product oracle: alpha + alpha*conj(alpha)*alpha
    const Complex expected = alpha + alpha * std::conj(alpha) * alpha;
    CHECK(std::abs(eval_src_series(word(kQuarter, {0, -1, 0}), alpha, 1) - expected) == 0.0);
    // start 0: position m carries the product of m-1 factors
    const Complex expected0 = Complex{1.0, 0.0} + alpha * std::conj(alpha);
    CHECK(std::abs(eval_src_series(word(kQuarter, {0, -1, 0}), alpha, 0) - expected0) < 1e-16);
}

TEST_CASE("eval_trc_series") {
    const Complex a = kTerAlpha, b = kTerBeta;
    // single digit: zero future fixes the bit to 0
    CHECK(eval_trc_series(word(kThird, {0}), a, b) == a);
    // (1,1): bits (1,0), so beta + alpha^2
    CHECK(std::abs(eval_trc_series(word(kThird, {0, 0}), a, b) - (b + a * a)) == 0.0);
    // (1,e^{i theta}): bits (0,0), alpha + e^{i theta} alpha^2
    const Complex e = kThird.unit_value(1);
    CHECK(std::abs(eval_trc_series(word(kThird, {0, 1}), a, b) - (a + e * a * a)) < 1e-16);
    CHECK_THROWS_AS(eval_trc_series(word(kThird, {0}), Complex{0.0, 0.0}, b), std::invalid_argument);
    // (1, e^{2 i theta}) skips a step and is not a ternary word
    CHECK_THROWS_AS(eval_trc_series(word(kThird, {0, 2}), a, b), std::invalid_argument);
}

TEST_CASE("appending zero digits never changes a series value") {
    std::mt19937_64 rng(4242);
    const auto pool = enumerate_words(Condition::trc, kThird, 5, FirstDigitPolicy::free);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& w = pool[rng() % pool.size()];
        std::vector<Digit> padded(w.digits().begin(), w.digits().end());
        padded.insert(padded.end(), 1 + rng() % 3, Digit::zero());
        const RevolvingSequence pw(kThird, std::move(padded));
        for (int start : {0, 1}) {
            CHECK(eval_grc_series(w, kTerAlpha, start) == eval_grc_series(pw, kTerAlpha, start));
            CHECK(eval_src_series(w, kTerAlpha, start) == eval_src_series(pw, kTerAlpha, start));
        }
        CHECK(eval_trc_series(w, kTerAlpha, kTerBeta) == eval_trc_series(pw, kTerAlpha, kTerBeta));
    }
}

TEST_CASE("make_cloud counts and frozen terdragon depth-2 values") {
    const PointCloud x1 = make_cloud(Family::x1, {kLevyAlpha, std::nullopt, kQuarter}, 3);
    CHECK(x1.count() == 8);
    CHECK(x1.source == "x1");
    CHECK(x1.depth == 3);

    const PointCloud t1 = make_cloud(Family::t1, terdragon_params(), 2);
    REQUIRE(t1.count() == 5);
    const Complex a = kTerAlpha, b = kTerBeta, e = kThird.unit_value(1);
    const Complex expected[] = {Complex{0.0, 0.0}, a * a, a, b + a * a, a + e * a * a};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::abs(t1.points[i] - expected[i]) < 1e-16);
    }

    const PointCloud h = make_cloud(Family::h, {kLevyAlpha, std::nullopt, kQuarter}, 0);
    REQUIRE(h.count() == 1);
    CHECK(h.points[0] == Complex{0.0, 0.0});
}

TEST_CASE("make_cloud validates parameters") {
    CHECK_THROWS_AS(make_cloud(Family::t1, {kTerAlpha, std::nullopt, kThird}, 2),
                    std::invalid_argument);  // missing beta
    CHECK_THROWS_AS(make_cloud(Family::x1, {Complex{1.0, 0.0}, std::nullopt, kQuarter}, 2),
                    std::invalid_argument);  // not a contraction
    CHECK_THROWS_AS(make_cloud(Family::t1, {Complex{0.0, 0.0}, kTerBeta, kThird}, 2),
                    std::invalid_argument);  // alpha = 0 degenerate
    CHECK_THROWS_AS(make_cloud(Family::x1, {kLevyAlpha, std::nullopt, kQuarter}, 30),
                    std::runtime_error);  // budget
}

TEST_CASE("truncation tail bound for random extensions") {
    std::mt19937_64 rng(31337);
    const auto pool = enumerate_words(Condition::trc, kThird, 4, FirstDigitPolicy::must_be_one);
    const double a = std::abs(kTerAlpha);
    const double c = std::max(1.0, std::abs(kTerBeta / kTerAlpha));
    for (int trial = 0; trial < 300; ++trial) {
        const auto& w = pool[rng() % pool.size()];
        // random valid ternary extension
        std::vector<Digit> ext(w.digits().begin(), w.digits().end());
        std::int64_t last = -1;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            if (!ext[i].is_zero()) {
                last = ext[i].exponent();
            }
        }
        const std::size_t extra = 1 + rng() % 6;
        for (std::size_t i = 0; i < extra; ++i) {
            const int choice = static_cast<int>(rng() % 3);
            if (choice == 0) {
                ext.push_back(Digit::zero());
            } else {
                std::int64_t exp = last < 0 ? 0 : (choice == 1 ? last : (last + 1) % 3);
                ext.push_back(Digit::unit(exp, kThird));
                last = exp;
            }
        }
        const RevolvingSequence extended(kThird, std::move(ext));
        REQUIRE(validate(extended, Condition::trc, FirstDigitPolicy::must_be_one));

        const double n = static_cast<double>(w.length());
        const double tail = c * std::pow(a, n + 1.0) / (1.0 - a);

        // the plain series obey the pure geometric tail bound
        const double grc_delta =
            std::abs(eval_grc_series(extended, kTerAlpha, 1) - eval_grc_series(w, kTerAlpha, 1));
        CHECK(grc_delta <= std::pow(a, n + 1.0) / (1.0 - a) + 1e-12);
        const double src_delta =
            std::abs(eval_src_series(extended, kTerAlpha, 0) - eval_src_series(w, kTerAlpha, 0));
        CHECK(src_delta <= std::pow(a, n) / (1.0 - a) + 1e-12);

        // the ternary series additionally admits one static-bit flip at the
        // prefix's last nonzero position m0, worth |alpha|^{m0-1} |alpha-beta|
        const double trc_delta = std::abs(eval_trc_series(extended, kTerAlpha, kTerBeta) -
                                          eval_trc_series(w, kTerAlpha, kTerBeta));
        double bound = tail;
        if (const auto m0 = last_nonzero_up_to(w, w.length())) {
            bound += std::pow(a, static_cast<double>(*m0 - 1)) * std::abs(kTerAlpha - kTerBeta);
        }
        CHECK(trc_delta <= bound + 1e-12);
    }
}

TEST_CASE("scaling identity spot check at depth 6") {
    const FamilyParams p{Complex{0.5, 0.5}, std::nullopt, kQuarter};
    const PointCloud h1 = make_cloud(Family::h1, p, 6);
    const PointCloud x1 = make_cloud(Family::x1, p, 6);
    REQUIRE(h1.count() == x1.count());
    for (std::size_t i = 0; i < h1.count(); ++i) {
        CHECK(std::abs(h1.points[i] - x1.points[i] / p.alpha) < 1e-14);
    }
}

TEST_CASE("eval_family_series dispatches by family") {
    const FamilyParams tp = terdragon_params();
    const auto w = word(kThird, {0, 0});
    CHECK(eval_family_series(Family::t1, tp, w) == eval_trc_series(w, kTerAlpha, kTerBeta));
    const FamilyParams gp{kLevyAlpha, std::nullopt, kQuarter};
    const auto g = word(kQuarter, {0, -1, 1});
    CHECK(eval_family_series(Family::x1, gp, g) == eval_grc_series(g, kLevyAlpha, 1));
    CHECK(eval_family_series(Family::h1, gp, g) == eval_grc_series(g, kLevyAlpha, 0));
    CHECK(eval_family_series(Family::h2, gp, g) == eval_src_series(g, kLevyAlpha, 0));
}

TEST_CASE("make_cloud is deterministic") {
    const FamilyParams p = terdragon_params();
    const PointCloud one = make_cloud(Family::t1, p, 6);
    const PointCloud two = make_cloud(Family::t1, p, 6);
    REQUIRE(one.count() == two.count());
    for (std::size_t i = 0; i < one.count(); ++i) {
        CHECK(one.points[i].real() == two.points[i].real());
        CHECK(one.points[i].imag() == two.points[i].imag());
    }
    CHECK(one.params == two.params);
}

}  // namespace
