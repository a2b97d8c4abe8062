#pragma once

#include <compare>
#include <span>
#include <vector>

#include "lesmorph/sym2.hpp"

namespace lesmorph {

/// Numerical slack for positive-semidefiniteness tests. The effective slack
/// is eig_tol * max(1, |A|_inf) of the tested matrix.
struct OrderTolerance {
    double eig_tol = 1e-12;
};

/// Eigenvalue pair (major, minor) used as the lexicographic ordering key.
struct LexPair {
    double major = 0.0;
    double minor = 0.0;
};

enum class LexOrdering { less, equal, greater };

/// min eigenvalue >= -slack, with the slack scaled by the matrix magnitude.
bool is_psd(const Sym2& a, const OrderTolerance& tol = {});

/// Loewner semi-order: a >= b iff a - b is positive semidefinite.
bool loewner_geq(const Sym2& a, const Sym2& b, const OrderTolerance& tol = {});

/// True iff y is a Loewner upper bound of every element. Throws
/// std::invalid_argument on an empty multiset.
bool is_upper_bound(const Sym2& y, std::span<const Sym2> xs, const OrderTolerance& tol = {});

/// The eigenvalue pair of y, major first.
LexPair lex_phi(const Sym2& y);

/// Lexicographic comparison: major decides, minor breaks ties.
LexOrdering lex_compare(const LexPair& a, const LexPair& b);

/// Affine normalisation X -> X / sqrt(2) + (1 - lambda1 / sqrt(2)) I, which
/// maps bi-cone eigenvalue ranges onto [0, 1] when lambda1 is the largest
/// eigenvalue of the multiset. Eigenvectors are unchanged.
std::vector<Sym2> shift_to_unit(std::span<const Sym2> xs, double lambda1);

/// Membership of y in the p-power upper bound cone of xs: y^p must be a
/// Loewner upper bound of every x^p. All eigenvalues of y and of every x
/// must be nonnegative (apply shift_to_unit or an explicit lift first);
/// otherwise a std::domain_error is thrown. p must be positive.
bool in_p_power_upper_bound(const Sym2& y, std::span<const Sym2> xs, double p,
                            const OrderTolerance& tol = {});

}  // namespace lesmorph
