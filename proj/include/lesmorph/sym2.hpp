#pragma once

#include <algorithm>
#include <cmath>

namespace lesmorph {

/// A real symmetric 2x2 matrix; only the upper triangle is stored
/// (a21 == a12 by construction).
struct Sym2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    static constexpr Sym2 zero() { return {0.0, 0.0, 0.0}; }
    static constexpr Sym2 identity() { return {1.0, 0.0, 1.0}; }
    static constexpr Sym2 scaled_identity(double c) { return {c, 0.0, c}; }

    constexpr double trace() const { return a11 + a22; }
    constexpr double det() const { return a11 * a22 - a12 * a12; }

    /// Largest absolute entry.
    double inf_norm() const {
        return std::max({std::abs(a11), std::abs(a12), std::abs(a22)});
    }

    constexpr Sym2 operator+(const Sym2& o) const {
        return {a11 + o.a11, a12 + o.a12, a22 + o.a22};
    }
    constexpr Sym2 operator-(const Sym2& o) const {
        return {a11 - o.a11, a12 - o.a12, a22 - o.a22};
    }
    constexpr Sym2 operator-() const { return {-a11, -a12, -a22}; }
    constexpr Sym2 operator*(double c) const { return {c * a11, c * a12, c * a22}; }

    constexpr bool operator==(const Sym2&) const = default;
};

constexpr Sym2 operator*(double c, const Sym2& a) { return a * c; }

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Sym2& a, const Sym2& b) { return (a - b).inf_norm(); }

}  // namespace lesmorph
