#pragma once

#include <span>
#include <vector>

#include "lesmorph/sym2.hpp"

namespace lesmorph {

/// Branch thresholds for the eigenvalue-based supremum characterisation.
/// The closed forms branch on exact equalities; these make the branches
/// deterministic under roundoff. tie_tol is absolute on the eigenvalue
/// scale, align_tol applies to |sin(angle difference)| of eigendirections.
struct SupTolerances {
    double tie_tol = 1e-9;
    double align_tol = 1e-9;
};

/// One eigenvalue of one input matrix together with its eigendirection.
/// Directions live mod pi in [-pi/2, pi/2). An isotropic source matrix
/// (both eigenvalues equal) has every direction as an eigenvector; the
/// stored angle is then a placeholder and `isotropic` is set.
struct EigenCandidate {
    double value = 0.0;
    double angle = 0.0;
    bool isotropic = false;
    int source = 0;  ///< index of the originating matrix
};

/// All 2n eigenpairs of the multiset, sorted by descending value with a
/// deterministic tiebreak (angle, then input index).
std::vector<EigenCandidate> collect_candidates(std::span<const Sym2> xs,
                                               const SupTolerances& tol = {});

/// Log-exp-supremum of a multiset of symmetric 2x2 matrices.
///
/// Let lambda1 be the largest eigenvalue over all eigenpairs and u1 its
/// eigendirection. If lambda1 is attained (within tie_tol) by another
/// eigenpair whose direction is not aligned with u1 -- an isotropic maximal
/// matrix counts as such -- the result is lambda1 * I. Otherwise it is
/// lambda1 u1 u1^T + mu* v1 v1^T with v1 perpendicular to u1 and mu* the
/// largest eigenvalue whose eigendirection is not aligned with u1.
///
/// Throws std::invalid_argument on an empty multiset.
Sym2 les(std::span<const Sym2> xs, const SupTolerances& tol = {});

/// Log-exp-infimum, the complement dual: -les({-x}).
Sym2 lei(std::span<const Sym2> xs, const SupTolerances& tol = {});

/// Relaxed log-exp-supremum: if lambda1 is unique (an isotropic maximum
/// counts as non-unique, while aligned duplicates of the same eigenpair
/// collapse into one) the result is lambda1 u1 u1^T + lambda2 v1 v1^T with
/// lambda2 the next eigenvalue over all eigenpairs regardless of direction;
/// otherwise lambda1 * I. Unlike les, this depends continuously on the
/// input data.
Sym2 rles(std::span<const Sym2> xs, const SupTolerances& tol = {});

/// Dual of rles by the same complement duality as lei. Not part of the
/// closed-form characterisations above; provided as the natural extension.
Sym2 rlei(std::span<const Sym2> xs, const SupTolerances& tol = {});

/// The pre-limit expression (1/m) log sum_i exp(m X_i), evaluated with the
/// eigenvalue shift by lambda1 and a log-space determinant so that no
/// intermediate over- or underflows. Not an upper bound at finite m; used
/// as the independent convergence oracle for les. Requires 0 < m <= 1e6.
Sym2 les_numeric(std::span<const Sym2> xs, double m);

}  // namespace lesmorph
