#pragma once

#include "lesmorph/sym2.hpp"

namespace lesmorph {

/// An RGB colour with channels normalised to [0, 1].
struct RgbColor {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    constexpr bool operator==(const RgbColor&) const = default;
};

/// Hue-chroma-luminance coordinates. Hue is stored as a fraction of a full
/// turn in [0, 1); the luminance is the modified luminance in [-1, 1].
struct Hcl {
    double h = 0.0;
    double c = 0.0;
    double l = 0.0;
};

/// Cartesian coordinates inside the HCL bi-cone:
///   x = C cos(2 pi H), y = C sin(2 pi H), z = modified luminance.
/// Membership means sqrt(x^2 + y^2) <= 1 - |z| and |z| <= 1.
struct BiConePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Slack allowed on bi-cone membership before an input is rejected as
/// out of gamut. Marginal overshoots up to this size are clamped radially.
inline constexpr double kGamutEps = 1e-9;

/// RGB -> HCL. Hue is 0 by convention when the chroma vanishes.
Hcl rgb_to_hcl(const RgbColor& c);

/// HCL -> Cartesian bi-cone point. Throws std::domain_error if the result
/// violates bi-cone membership beyond kGamutEps.
BiConePoint hcl_to_bicone(const Hcl& hcl);

/// Linear map from bi-cone coordinates to the colour matrix
///   (sqrt(2)/2) * [[z - y, x], [x, z + y]].
/// Its eigenvalues are (z +- C) / sqrt(2).
Sym2 bicone_to_matrix(const BiConePoint& p);

/// The full bijection: RGB -> HCL -> bi-cone -> symmetric 2x2 matrix.
/// Throws std::domain_error if a channel is outside [0, 1] beyond kGamutEps.
Sym2 rgb_to_matrix(const RgbColor& c);

/// Inverse of the bijection. Matrices outside the bi-cone within kGamutEps
/// (on the eigenvalue scale) are clamped back onto it; beyond that an
/// out-of-gamut std::domain_error is thrown.
RgbColor matrix_to_rgb(const Sym2& a);

/// True when both eigenvalues lie in [-1/sqrt(2) - tol, 1/sqrt(2) + tol].
bool in_bicone(const Sym2& a, double tol = kGamutEps);

}  // namespace lesmorph
