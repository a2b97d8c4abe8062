#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lesmorph/spectral.hpp"
#include "test_support.hpp"

using namespace lesmorph;
namespace ts = test_support;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

// |cos| of the angle between the major eigenvector and a reference vector;
// 1 means aligned up to sign.
double alignment(const SpectralDecomposition& d, double vx, double vy) {
    const double n = std::hypot(vx, vy);
    return std::abs(std::cos(d.phi) * vx / n + std::sin(d.phi) * vy / n);
}

}  // namespace

TEST_CASE("decompose known matrices") {
    const Sym2 x1{kSqrt3 / (2 * kSqrt2), -1.0 / (2 * kSqrt2), -kSqrt3 / (2 * kSqrt2)};
    const SpectralDecomposition d1 = decompose(x1);
    CHECK(d1.lambda == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
    CHECK(d1.mu == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-14));
    CHECK(alignment(d1, -0.9659258262890683, 0.25881904510252074) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const SpectralDecomposition iso = decompose(Sym2::scaled_identity(0.37));
    CHECK(iso.lambda == doctest::Approx(0.37));
    CHECK(iso.mu == doctest::Approx(0.37));
    CHECK(iso.phi == 0.0);

    const Sym2 x2{-2.0 / (5 * kSqrt2), kSqrt3 / (5 * kSqrt2), 0.0};
    const SpectralDecomposition d2 = decompose(x2);
    CHECK(d2.lambda == doctest::Approx(1.0 / (5 * kSqrt2)).epsilon(1e-14));
    CHECK(d2.mu == doctest::Approx(-3.0 / (5 * kSqrt2)).epsilon(1e-14));
    CHECK(alignment(d2, 0.5, kSqrt3 / 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("recompose basics") {
    CHECK(max_abs_diff(recompose(1.0, 0.0, 0.0), {1, 0, 0}) == 0.0);
    CHECK(max_abs_diff(recompose(0.7, 0.7, 1.234), Sym2::scaled_identity(0.7)) <= 1e-15);
}

TEST_CASE("decompose/recompose round trip") {
    ts::Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Sym2 a{ts::uniform(rng, -3, 3), ts::uniform(rng, -3, 3), ts::uniform(rng, -3, 3)};
        const SpectralDecomposition d = decompose(a);
        CHECK(d.lambda >= d.mu);
        CHECK(std::abs(d.phi) <= std::numbers::pi / 2 + 1e-15);
        CHECK(max_abs_diff(recompose(d), a) <= 1e-13 * std::max(1.0, a.inf_norm()));
    }
}

TEST_CASE("matrix_apply basics") {
    CHECK(max_abs_diff(matrix_exp(Sym2::zero()), Sym2::identity()) <= 1e-15);

    const Sym2 diag{0.3, 0.0, -1.2};
    const Sym2 e = matrix_exp(diag);
    CHECK(e.a11 == doctest::Approx(std::exp(0.3)).epsilon(1e-14));
    CHECK(e.a22 == doctest::Approx(std::exp(-1.2)).epsilon(1e-14));
    CHECK(std::abs(e.a12) <= 1e-15);
}

TEST_CASE("matrix exp/log invert each other") {
    ts::Rng rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const Sym2 a = ts::random_sym2(rng, -5.0, 5.0);
        CHECK(max_abs_diff(matrix_log(matrix_exp(a)), a) <= 1e-10 * std::max(1.0, a.inf_norm()));
    }
}

TEST_CASE("matrix_apply with the identity function is the identity") {
    ts::Rng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const Sym2 a = ts::random_sym2(rng, -2.0, 2.0);
        const Sym2 same = matrix_apply(a, [](double t) { return t; });
        CHECK(max_abs_diff(same, a) <= 1e-14 * std::max(1.0, a.inf_norm()));
    }
}

TEST_CASE("matrix exp is positive definite") {
    ts::Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const Sym2 a = ts::random_sym2(rng, -4.0, 4.0);
        const double m = ts::uniform(rng, 0.1, 50.0);
        const SpectralDecomposition d = decompose(matrix_exp(a * m));
        CHECK(d.mu > 0.0);
    }
}

TEST_CASE("matrix function domain errors") {
    CHECK_THROWS_AS(matrix_log({1.0, 0.0, -0.5}), std::domain_error);
    CHECK_THROWS_AS(matrix_log(Sym2::zero()), std::domain_error);
    CHECK_THROWS_AS(matrix_apply(Sym2{-1.0, 0.0, 2.0}, [](double t) { return std::log(t); }),
                    std::domain_error);
    CHECK_THROWS_AS(matrix_pow({1.0, 0.0, -0.5}, 2.0), std::domain_error);
}

TEST_CASE("rotate") {
    const Sym2 a{0.4, -0.1, 0.2};
    CHECK(max_abs_diff(rotate(a, 0.0), a) == 0.0);

    const Sym2 swapped = rotate({1, 0, 0}, std::numbers::pi / 2);
    CHECK(max_abs_diff(swapped, {0, 0, 1}) <= 1e-15);

    ts::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Sym2 m = ts::random_sym2(rng, -2.0, 2.0);
        const double theta = ts::uniform(rng, -4.0, 4.0);
        const SpectralDecomposition before = decompose(m);
        const SpectralDecomposition after = decompose(rotate(m, theta));
        CHECK(after.lambda == doctest::Approx(before.lambda).epsilon(1e-13));
        CHECK(after.mu == doctest::Approx(before.mu).epsilon(1e-13));
        if (before.lambda - before.mu > 1e-6) {
            // angle shifts by theta (mod pi, sign-invariant)
            CHECK(std::abs(std::sin(after.phi - before.phi - theta)) <= 1e-10);
        }
    }
}
