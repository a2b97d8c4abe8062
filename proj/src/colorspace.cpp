#include "lesmorph/colorspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lesmorph/spectral.hpp"

namespace lesmorph {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;  // floor can round t - floor(t) up to 1.0
}

void check_rgb(const RgbColor& c) {
    const double lo = -kGamutEps;
    const double hi = 1.0 + kGamutEps;
    if (!(c.r >= lo && c.r <= hi && c.g >= lo && c.g <= hi && c.b >= lo && c.b <= hi)) {
        throw std::domain_error("rgb channel outside [0,1]");
    }
}

}  // namespace

Hcl rgb_to_hcl(const RgbColor& c) {
    check_rgb(c);
    const double r = std::clamp(c.r, 0.0, 1.0);
    const double g = std::clamp(c.g, 0.0, 1.0);
    const double b = std::clamp(c.b, 0.0, 1.0);
    const double hi = std::max({r, g, b});
    const double lo = std::min({r, g, b});
    const double chroma = hi - lo;

    Hcl out;
    out.c = chroma;
    out.l = hi + lo - 1.0;  // 2 * (hi + lo) / 2 - 1
    if (chroma == 0.0) {
        out.h = 0.0;  // hue undefined on the grey axis
    } else if (hi == r) {
        out.h = wrap_unit((g - b) / (6.0 * chroma));
    } else if (hi == g) {
        out.h = wrap_unit((b - r) / (6.0 * chroma) + 1.0 / 3.0);
    } else {
        out.h = wrap_unit((r - g) / (6.0 * chroma) + 2.0 / 3.0);
    }
    return out;
}

BiConePoint hcl_to_bicone(const Hcl& hcl) {
    const double angle = kTwoPi * hcl.h;
    BiConePoint p{hcl.c * std::cos(angle), hcl.c * std::sin(angle), hcl.l};
    if (std::hypot(p.x, p.y) > 1.0 - std::abs(p.z) + kGamutEps || std::abs(p.z) > 1.0 + kGamutEps) {
        throw std::domain_error("point outside the HCL bi-cone");
    }
    return p;
}

Sym2 bicone_to_matrix(const BiConePoint& p) {
    const double k = kSqrt2 / 2.0;
    return {k * (p.z - p.y), k * p.x, k * (p.z + p.y)};
}

Sym2 rgb_to_matrix(const RgbColor& c) { return bicone_to_matrix(hcl_to_bicone(rgb_to_hcl(c))); }

bool in_bicone(const Sym2& a, double tol) {
    const SpectralDecomposition d = decompose(a);
    const double bound = 1.0 / kSqrt2;
    return d.lambda <= bound + tol && d.mu >= -bound - tol;
}

RgbColor matrix_to_rgb(const Sym2& a) {
    double z = a.trace() / kSqrt2;
    double x = kSqrt2 * a.a12;
    double y = (a.a22 - a.a11) / kSqrt2;
    double chroma = std::hypot(x, y);

    // Eigenvalues are (z +- chroma) / sqrt(2); reject beyond the gamut slack,
    // clamp marginal overshoot radially (and axially for the tips).
    if ((z + chroma) / kSqrt2 > 1.0 / kSqrt2 + kGamutEps ||
        (z - chroma) / kSqrt2 < -1.0 / kSqrt2 - kGamutEps) {
        throw std::domain_error("matrix outside the HCL bi-cone");
    }
    z = std::clamp(z, -1.0, 1.0);
    chroma = std::min(chroma, 1.0 - std::abs(z));

    double h = chroma == 0.0 ? 0.0 : wrap_unit(std::atan2(y, x) / kTwoPi);
    const double lum = 0.5 * (z + 1.0);

    // Standard hexagonal sector inverse of the hue/chroma map.
    const double h6 = 6.0 * h;
    const int sector = std::min(static_cast<int>(h6), 5);
    const double second = chroma * (1.0 - std::abs(std::fmod(h6, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    switch (sector) {
        case 0: r = chroma; g = second; break;
        case 1: r = second; g = chroma; break;
        case 2: g = chroma; b = second; break;
        case 3: g = second; b = chroma; break;
        case 4: r = second; b = chroma; break;
        default: r = chroma; b = second; break;
    }
    const double base = lum - 0.5 * chroma;
    return {std::clamp(r + base, 0.0, 1.0),
            std::clamp(g + base, 0.0, 1.0),
            std::clamp(b + base, 0.0, 1.0)};
}

}  // namespace lesmorph
