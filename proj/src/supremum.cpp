#include "lesmorph/supremum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lesmorph/spectral.hpp"

namespace lesmorph {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Wrap a direction angle into [-pi/2, pi/2).
double wrap_direction(double angle) {
    while (angle >= kHalfPi) angle -= std::numbers::pi;
    while (angle < -kHalfPi) angle += std::numbers::pi;
    return angle;
}

bool aligned(double angle_a, double angle_b, double align_tol) {
    return std::abs(std::sin(angle_a - angle_b)) <= align_tol;
}

void require_non_empty(std::span<const Sym2> xs, const char* who) {
    if (xs.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty multiset");
    }
}

std::vector<Sym2> negated(std::span<const Sym2> xs) {
    std::vector<Sym2> out;
    out.reserve(xs.size());
    for (const Sym2& x : xs) out.push_back(-x);
    return out;
}

}  // namespace

std::vector<EigenCandidate> collect_candidates(std::span<const Sym2> xs,
                                               const SupTolerances& tol) {
    require_non_empty(xs, "collect_candidates");
    std::vector<EigenCandidate> cands;
    cands.reserve(2 * xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        const SpectralDecomposition d = decompose(xs[i]);
        const bool iso = d.lambda - d.mu <= tol.tie_tol;
        const int idx = static_cast<int>(i);
        cands.push_back({d.lambda, wrap_direction(d.phi), iso, idx});
        cands.push_back({d.mu, wrap_direction(d.phi + kHalfPi), iso, idx});
    }
    std::sort(cands.begin(), cands.end(), [](const EigenCandidate& a, const EigenCandidate& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.source < b.source;
    });
    return cands;
}

Sym2 les(std::span<const Sym2> xs, const SupTolerances& tol) {
    require_non_empty(xs, "les");
    const std::vector<EigenCandidate> cands = collect_candidates(xs, tol);
    const EigenCandidate& top = cands.front();

    // Tie test first, then the alignment test on the maximal eigenvectors.
    // An isotropic maximal matrix provides eigenvectors in all directions,
    // so it always forces the identity branch.
    if (top.isotropic) {
        return Sym2::scaled_identity(top.value);
    }
    for (size_t k = 1; k < cands.size() && cands[k].value >= top.value - tol.tie_tol; ++k) {
        if (cands[k].isotropic || !aligned(cands[k].angle, top.angle, tol.align_tol)) {
            return Sym2::scaled_identity(top.value);
        }
    }

    // Unique (or all-aligned) maximum: the minor eigenvalue is the largest
    // candidate whose direction is not aligned with the top one. The top
    // matrix's own minor eigenpair is perpendicular, so a candidate exists.
    for (size_t k = 1; k < cands.size(); ++k) {
        if (cands[k].isotropic || !aligned(cands[k].angle, top.angle, tol.align_tol)) {
            return recompose(top.value, cands[k].value, top.angle);
        }
    }
    return Sym2::scaled_identity(top.value);  // unreachable for valid input
}

Sym2 lei(std::span<const Sym2> xs, const SupTolerances& tol) {
    require_non_empty(xs, "lei");
    return -les(negated(xs), tol);
}

Sym2 rles(std::span<const Sym2> xs, const SupTolerances& tol) {
    require_non_empty(xs, "rles");
    const std::vector<EigenCandidate> cands = collect_candidates(xs, tol);
    const EigenCandidate& top = cands.front();
    if (top.isotropic) {
        return Sym2::scaled_identity(top.value);
    }
    // Co-maxima aligned with the top eigendirection are duplicates of the
    // same eigenpair and collapse into it; only a non-aligned (or isotropic)
    // co-maximum makes the maximum non-unique.
    size_t k = 1;
    for (; k < cands.size() && cands[k].value >= top.value - tol.tie_tol; ++k) {
        if (cands[k].isotropic || !aligned(cands[k].angle, top.angle, tol.align_tol)) {
            return Sym2::scaled_identity(top.value);
        }
    }
    if (k == cands.size()) {
        return Sym2::scaled_identity(top.value);  // unreachable for valid input
    }
    return recompose(top.value, cands[k].value, top.angle);
}

Sym2 rlei(std::span<const Sym2> xs, const SupTolerances& tol) {
    require_non_empty(xs, "rlei");
    return -rles(negated(xs), tol);
}

Sym2 les_numeric(std::span<const Sym2> xs, double m) {
    require_non_empty(xs, "les_numeric");
    if (!(m > 0.0) || m > 1e6) {
        throw std::domain_error("les_numeric: m must lie in (0, 1e6]");
    }

    struct Pair {
        double value;  // eigenvalue
        double angle;  // eigendirection
    };
    std::vector<Pair> pairs;
    pairs.reserve(2 * xs.size());
    double lambda1 = -std::numeric_limits<double>::infinity();
    for (const Sym2& x : xs) {
        const SpectralDecomposition d = decompose(x);
        pairs.push_back({d.lambda, d.phi});
        pairs.push_back({d.mu, d.phi + kHalfPi});
        lambda1 = std::max(lambda1, d.lambda);
    }

    // E = sum_i exp(m (X_i - lambda1 I)); every exponent is <= 0, so the
    // entries stay in (0, 2n].
    Sym2 e = Sym2::zero();
    for (size_t k = 0; k < pairs.size(); k += 2) {
        const double wl = std::exp(m * (pairs[k].value - lambda1));
        const double wm = std::exp(m * (pairs[k + 1].value - lambda1));
        e = e + recompose(wl, wm, pairs[k].angle);
    }
    const double mean = 0.5 * e.trace();
    const double disc = std::hypot(0.5 * (e.a11 - e.a22), e.a12);
    const double e1 = mean + disc;
    const double phi = 0.5 * std::atan2(2.0 * e.a12, e.a11 - e.a22);

    // The minor eigenvalue of E can sit far below machine precision of the
    // entries; recover it through det(E) = sum_{k<l} a_k a_l sin^2(t_k-t_l)
    // evaluated entirely in log space (a_k are the exp weights above).
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    terms.reserve(pairs.size() * (pairs.size() - 1) / 2);
    for (size_t k = 0; k + 1 < pairs.size(); ++k) {
        for (size_t l = k + 1; l < pairs.size(); ++l) {
            const double s = std::sin(pairs[k].angle - pairs[l].angle);
            if (s == 0.0) continue;
            const double t = m * (pairs[k].value + pairs[l].value - 2.0 * lambda1) +
                             std::log(s * s);
            terms.push_back(t);
            max_term = std::max(max_term, t);
        }
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    const double log_det = max_term + std::log(sum);

    const double top = lambda1 + std::log(e1) / m;
    const double bottom = std::min(top, lambda1 + (log_det - std::log(e1)) / m);
    return recompose(top, bottom, phi);
}

}  // namespace lesmorph
