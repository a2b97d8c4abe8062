#pragma once

#include <stdexcept>

#include "lesmorph/sym2.hpp"

namespace lesmorph {

/// Eigenpair form of a symmetric 2x2 matrix:
///   A = lambda * u u^T + mu * v v^T,  lambda >= mu,
/// with u = (cos phi, sin phi), v = (-sin phi, cos phi), phi in [-pi/2, pi/2].
///
/// u and -u describe the same eigendirection; every consumer in this library
/// is invariant under that sign choice.
struct SpectralDecomposition {
    double lambda = 0.0;  ///< major eigenvalue
    double mu = 0.0;      ///< minor eigenvalue
    double phi = 0.0;     ///< angle of the major eigenvector, radians
};

/// Closed-form eigendecomposition. Near-isotropic input (|lambda - mu| below
/// 1e-13 * max(1, |A|_inf)) reports phi = 0; the angle carries no information
/// in that case.
SpectralDecomposition decompose(const Sym2& a);

/// Rebuild the matrix lambda * u u^T + mu * v v^T from its eigenpair form.
Sym2 recompose(const SpectralDecomposition& d);
Sym2 recompose(double lambda, double mu, double phi);

/// Apply a scalar function to a symmetric matrix through its eigenvalues:
/// f(A) = f(lambda) u u^T + f(mu) v v^T. Throws std::domain_error if f is
/// not finite at an eigenvalue.
template <class F>
Sym2 matrix_apply(const Sym2& a, F&& f) {
    const SpectralDecomposition d = decompose(a);
    const double fl = f(d.lambda);
    const double fm = f(d.mu);
    if (!std::isfinite(fl) || !std::isfinite(fm)) {
        throw std::domain_error("matrix_apply: function not finite at an eigenvalue");
    }
    return recompose(fl, fm, d.phi);
}

Sym2 matrix_exp(const Sym2& a);

/// Requires both eigenvalues strictly positive.
Sym2 matrix_log(const Sym2& a);

/// Requires both eigenvalues nonnegative (p > 0); 0^p evaluates to 0.
Sym2 matrix_pow(const Sym2& a, double p);

/// Congruence with the rotation by `angle`: R A R^T. Eigenvalues are
/// preserved; the eigenvector angle shifts by `angle`.
Sym2 rotate(const Sym2& a, double angle);

}  // namespace lesmorph
