#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lesmorph/colorspace.hpp"
#include "lesmorph/spectral.hpp"
#include "test_support.hpp"

using namespace lesmorph;
namespace ts = test_support;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
}  // namespace

TEST_CASE("rgb_to_hcl sector formulas") {
    const Hcl blue = rgb_to_hcl({0.0, 0.0, 1.0});
    CHECK(blue.h == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(blue.c == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(blue.l == doctest::Approx(0.0).epsilon(1e-15));

    const Hcl grey = rgb_to_hcl({0.5, 0.5, 0.5});
    CHECK(grey.h == 0.0);
    CHECK(grey.c == 0.0);
    CHECK(grey.l == doctest::Approx(0.0).epsilon(1e-15));

    const Hcl brown = rgb_to_hcl({0.6, 0.4, 0.2});
    CHECK(brown.h == doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(brown.c == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(brown.l == doctest::Approx(-0.2).epsilon(1e-14));
}

TEST_CASE("rgb_to_hcl is consistent across sector ties") {
    // r = g > b lies on the boundary of the R and G sectors; both formulas
    // give 1/6. Same for the other boundaries.
    CHECK(rgb_to_hcl({0.8, 0.8, 0.1}).h == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(rgb_to_hcl({0.1, 0.8, 0.8}).h == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rgb_to_hcl({0.8, 0.1, 0.8}).h == doctest::Approx(5.0 / 6).epsilon(1e-14));
}

TEST_CASE("hcl_to_bicone basics") {
    const BiConePoint p = hcl_to_bicone({2.0 / 3, 1.0, 0.0});
    CHECK(p.x == doctest::Approx(std::cos(4.0 * std::numbers::pi / 3)).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(std::sin(4.0 * std::numbers::pi / 3)).epsilon(1e-15));
    CHECK(p.x == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(-kSqrt3 / 2).epsilon(1e-14));
    CHECK(p.z == 0.0);

    const BiConePoint origin = hcl_to_bicone({0.0, 0.0, 0.0});
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);
    CHECK(origin.z == 0.0);

    const BiConePoint apex = hcl_to_bicone({0.0, 0.0, 1.0});
    CHECK(apex.z == 1.0);

    CHECK_THROWS_AS(hcl_to_bicone({0.0, 0.9, 0.5}), std::domain_error);
}

TEST_CASE("bicone_to_matrix known points") {
    const Sym2 white = bicone_to_matrix({0.0, 0.0, 1.0});
    CHECK(max_abs_diff(white, Sym2::scaled_identity(1.0 / kSqrt2)) <= 1e-15);

    const Sym2 black = bicone_to_matrix({0.0, 0.0, -1.0});
    CHECK(max_abs_diff(black, Sym2::scaled_identity(-1.0 / kSqrt2)) <= 1e-15);

    const Sym2 x1 = bicone_to_matrix({-0.5, -kSqrt3 / 2, 0.0});
    const Sym2 expected{kSqrt3 / (2 * kSqrt2), -1.0 / (2 * kSqrt2), -kSqrt3 / (2 * kSqrt2)};
    CHECK(max_abs_diff(x1, expected) <= 1e-15);
}

TEST_CASE("rgb_to_matrix known colours") {
    const Sym2 x1 = rgb_to_matrix({0.0, 0.0, 1.0});
    CHECK(max_abs_diff(x1, {kSqrt3 / (2 * kSqrt2), -1.0 / (2 * kSqrt2), -kSqrt3 / (2 * kSqrt2)}) <=
          1e-15);

    const Sym2 x2 = rgb_to_matrix({0.6, 0.4, 0.2});
    CHECK(max_abs_diff(x2, {-2.0 / (5 * kSqrt2), kSqrt3 / (5 * kSqrt2), 0.0}) <= 1e-15);

    const Sym2 x3 = rgb_to_matrix({1.0 / 3, 1.0 / 3, 5.0 / 6});
    CHECK(max_abs_diff(x3, {(2 + 3 * kSqrt3) / (12 * kSqrt2), -3.0 / (12 * kSqrt2),
                            (2 - 3 * kSqrt3) / (12 * kSqrt2)}) <= 1e-15);

    CHECK(max_abs_diff(rgb_to_matrix({0.5, 0.5, 0.5}), Sym2::zero()) <= 1e-15);

    CHECK_THROWS_AS(rgb_to_matrix({1.5, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("matrix_to_rgb known matrices") {
    const Sym2 s{(3 + kSqrt3) / (5 * kSqrt2), -1.0 / (5 * kSqrt2), (3 - kSqrt3) / (5 * kSqrt2)};
    const RgbColor c = matrix_to_rgb(s);
    CHECK(c.r == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(c.g == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(c.b == doctest::Approx(1.0).epsilon(1e-13));

    const RgbColor white = matrix_to_rgb(Sym2::scaled_identity(1.0 / kSqrt2));
    CHECK(white.r == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(white.g == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(white.b == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gamut handling at the bi-cone boundary") {
    // Marginal overshoot is clamped, larger violations are rejected.
    const Sym2 slightly_out = Sym2::scaled_identity(1.0 / kSqrt2 + 1e-11);
    const RgbColor c = matrix_to_rgb(slightly_out);
    CHECK(c.r <= 1.0);
    CHECK(c.r == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(matrix_to_rgb(Sym2::scaled_identity(1.0 / kSqrt2 + 1e-3)), std::domain_error);
    CHECK_THROWS_AS(matrix_to_rgb(Sym2::scaled_identity(-1.0 / kSqrt2 - 1e-3)), std::domain_error);
}

TEST_CASE("round trip over the rgb cube") {
    double worst = 0.0;
    const int n = 21;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const RgbColor c{i / (n - 1.0), j / (n - 1.0), k / (n - 1.0)};
                const RgbColor back = matrix_to_rgb(rgb_to_matrix(c));
                worst = std::max({worst, std::abs(back.r - c.r), std::abs(back.g - c.g),
                                  std::abs(back.b - c.b)});
            }
        }
    }
    for (int mask = 0; mask < 8; ++mask) {
        const RgbColor c{static_cast<double>(mask & 1), static_cast<double>((mask >> 1) & 1),
                         static_cast<double>((mask >> 2) & 1)};
        const RgbColor back = matrix_to_rgb(rgb_to_matrix(c));
        worst = std::max({worst, std::abs(back.r - c.r), std::abs(back.g - c.g),
                          std::abs(back.b - c.b)});
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("matrix map is linear in the bi-cone coordinates") {
    ts::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const BiConePoint p{ts::uniform(rng, -1, 1), ts::uniform(rng, -1, 1),
                            ts::uniform(rng, -1, 1)};
        const BiConePoint q{ts::uniform(rng, -1, 1), ts::uniform(rng, -1, 1),
                            ts::uniform(rng, -1, 1)};
        const double a = ts::uniform(rng, -2, 2);
        const double b = ts::uniform(rng, -2, 2);
        const BiConePoint mix{a * p.x + b * q.x, a * p.y + b * q.y, a * p.z + b * q.z};
        const Sym2 lhs = bicone_to_matrix(mix);
        const Sym2 rhs = bicone_to_matrix(p) * a + bicone_to_matrix(q) * b;
        CHECK(max_abs_diff(lhs, rhs) <= 1e-14);
    }
}

TEST_CASE("eigenvalues of the colour matrix are (z +- C)/sqrt(2)") {
    ts::Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const RgbColor c = ts::random_rgb(rng);
        const Hcl hcl = rgb_to_hcl(c);
        const BiConePoint p = hcl_to_bicone(hcl);
        const SpectralDecomposition d = decompose(bicone_to_matrix(p));
        CHECK(d.lambda == doctest::Approx((p.z + hcl.c) / kSqrt2).epsilon(1e-12));
        CHECK(d.mu == doctest::Approx((p.z - hcl.c) / kSqrt2).epsilon(1e-12));
    }
}

TEST_CASE("trace equals sqrt(2) times the modified luminance") {
    ts::Rng rng(44);
    for (int trial = 0; trial < 500; ++trial) {
        const RgbColor c = ts::random_rgb(rng);
        CHECK(std::abs(rgb_to_matrix(c).trace() - kSqrt2 * rgb_to_hcl(c).l) <= 1e-12);
    }
}
