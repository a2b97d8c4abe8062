#include "lesmorph/spectral.hpp"

#include <cmath>

namespace lesmorph {

SpectralDecomposition decompose(const Sym2& a) {
    const double mean = 0.5 * (a.a11 + a.a22);
    const double half_diff = 0.5 * (a.a11 - a.a22);
    const double disc = std::hypot(half_diff, a.a12);
    SpectralDecomposition d;
    d.lambda = mean + disc;
    d.mu = mean - disc;
    // 2 * disc == lambda - mu; below this threshold the matrix is treated as
    // isotropic and the angle is a placeholder.
    if (2.0 * disc <= 1e-13 * std::max(1.0, a.inf_norm())) {
        d.phi = 0.0;
    } else {
        d.phi = 0.5 * std::atan2(2.0 * a.a12, a.a11 - a.a22);
    }
    return d;
}

Sym2 recompose(double lambda, double mu, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {lambda * c * c + mu * s * s,
            (lambda - mu) * c * s,
            lambda * s * s + mu * c * c};
}

Sym2 recompose(const SpectralDecomposition& d) { return recompose(d.lambda, d.mu, d.phi); }

Sym2 matrix_exp(const Sym2& a) {
    return matrix_apply(a, [](double t) { return std::exp(t); });
}

Sym2 matrix_log(const Sym2& a) {
    const SpectralDecomposition d = decompose(a);
    if (d.mu <= 0.0) {
        throw std::domain_error("matrix_log: matrix must be positive definite");
    }
    return recompose(std::log(d.lambda), std::log(d.mu), d.phi);
}

Sym2 matrix_pow(const Sym2& a, double p) {
    const SpectralDecomposition d = decompose(a);
    if (d.mu < 0.0) {
        throw std::domain_error("matrix_pow: matrix must have nonnegative eigenvalues");
    }
    return recompose(std::pow(d.lambda, p), std::pow(d.mu, p), d.phi);
}

Sym2 rotate(const Sym2& a, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * c * a.a11 - 2.0 * c * s * a.a12 + s * s * a.a22,
            c * s * (a.a11 - a.a22) + (c * c - s * s) * a.a12,
            s * s * a.a11 + 2.0 * c * s * a.a12 + c * c * a.a22};
}

}  // namespace lesmorph
