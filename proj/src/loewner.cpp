#include "lesmorph/loewner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lesmorph/spectral.hpp"

namespace lesmorph {

bool is_psd(const Sym2& a, const OrderTolerance& tol) {
    const double slack = tol.eig_tol * std::max(1.0, a.inf_norm());
    return decompose(a).mu >= -slack;
}

bool loewner_geq(const Sym2& a, const Sym2& b, const OrderTolerance& tol) {
    return is_psd(a - b, tol);
}

bool is_upper_bound(const Sym2& y, std::span<const Sym2> xs, const OrderTolerance& tol) {
    if (xs.empty()) {
        throw std::invalid_argument("is_upper_bound: empty multiset");
    }
    for (const Sym2& x : xs) {
        if (!loewner_geq(y, x, tol)) {
            return false;
        }
    }
    return true;
}

LexPair lex_phi(const Sym2& y) {
    const SpectralDecomposition d = decompose(y);
    return {d.lambda, d.mu};
}

LexOrdering lex_compare(const LexPair& a, const LexPair& b) {
    if (a.major < b.major) return LexOrdering::less;
    if (a.major > b.major) return LexOrdering::greater;
    if (a.minor < b.minor) return LexOrdering::less;
    if (a.minor > b.minor) return LexOrdering::greater;
    return LexOrdering::equal;
}

std::vector<Sym2> shift_to_unit(std::span<const Sym2> xs, double lambda1) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double offset = 1.0 - lambda1 * inv_sqrt2;
    std::vector<Sym2> out;
    out.reserve(xs.size());
    for (const Sym2& x : xs) {
        out.push_back(x * inv_sqrt2 + Sym2::scaled_identity(offset));
    }
    return out;
}

namespace {

Sym2 nonnegative_pow(const Sym2& a, double p, double slack) {
    SpectralDecomposition d = decompose(a);
    if (d.mu < -slack) {
        throw std::domain_error("in_p_power_upper_bound: negative eigenvalue without lift");
    }
    d.lambda = std::max(d.lambda, 0.0);
    d.mu = std::max(d.mu, 0.0);
    return recompose(std::pow(d.lambda, p), std::pow(d.mu, p), d.phi);
}

}  // namespace

bool in_p_power_upper_bound(const Sym2& y, std::span<const Sym2> xs, double p,
                            const OrderTolerance& tol) {
    if (xs.empty()) {
        throw std::invalid_argument("in_p_power_upper_bound: empty multiset");
    }
    if (!(p > 0.0)) {
        throw std::domain_error("in_p_power_upper_bound: p must be positive");
    }
    const double slack = tol.eig_tol * std::max(1.0, y.inf_norm());
    const Sym2 yp = nonnegative_pow(y, p, slack);
    for (const Sym2& x : xs) {
        const Sym2 xp = nonnegative_pow(x, p, tol.eig_tol * std::max(1.0, x.inf_norm()));
        if (!loewner_geq(yp, xp, tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace lesmorph
