#include "lesmorph/morphology.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace lesmorph {

namespace {

void check_se(const std::vector<SeOffset>& offsets, size_t n_heights, bool has_heights) {
    if (offsets.empty()) {
        throw std::invalid_argument("structuring element: empty offset set");
    }
    if (has_heights && n_heights != offsets.size()) {
        throw std::invalid_argument("structuring element: heights do not match offsets");
    }
}

}  // namespace

StructuringElement StructuringElement::flat(std::vector<SeOffset> offsets) {
    check_se(offsets, 0, false);
    StructuringElement se;
    se.offsets_ = std::move(offsets);
    return se;
}

StructuringElement StructuringElement::with_grey_heights(std::vector<SeOffset> offsets,
                                                         std::vector<double> heights) {
    check_se(offsets, heights.size(), true);
    StructuringElement se;
    se.offsets_ = std::move(offsets);
    se.grey_heights_ = std::move(heights);
    return se;
}

StructuringElement StructuringElement::with_matrix_heights(std::vector<SeOffset> offsets,
                                                           std::vector<Sym2> heights) {
    check_se(offsets, heights.size(), true);
    StructuringElement se;
    se.offsets_ = std::move(offsets);
    se.matrix_heights_ = std::move(heights);
    return se;
}

StructuringElement StructuringElement::reflected() const {
    StructuringElement se = *this;
    for (SeOffset& o : se.offsets_) {
        o.dx = -o.dx;
        o.dy = -o.dy;
    }
    return se;
}

StructuringElement se_make(SeShape shape, int radius) {
    if (radius < 1) {
        throw std::invalid_argument("se_make: radius must be >= 1");
    }
    std::vector<SeOffset> offsets;
    const double disc_limit = (radius + 0.5) * (radius + 0.5);
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            bool keep = false;
            switch (shape) {
                case SeShape::square: keep = true; break;
                case SeShape::diamond: keep = std::abs(dx) + std::abs(dy) <= radius; break;
                case SeShape::disc: keep = dx * dx + dy * dy <= disc_limit; break;
                case SeShape::cross: keep = dx == 0 || dy == 0; break;
            }
            if (keep) offsets.push_back({dx, dy});
        }
    }
    return StructuringElement::flat(std::move(offsets));
}

StructuringElement se_dilate(const StructuringElement& b1, const StructuringElement& b2,
                             const SupTolerances& tol) {
    if (b1.has_grey_heights() || b2.has_grey_heights()) {
        throw std::invalid_argument("se_dilate: grey-height elements are not composable here");
    }
    // Ordered map keeps the composed offsets deterministic.
    std::map<std::pair<int, int>, std::vector<Sym2>> sums;
    for (size_t i = 0; i < b1.offsets().size(); ++i) {
        for (size_t j = 0; j < b2.offsets().size(); ++j) {
            const SeOffset o{b1.offsets()[i].dx + b2.offsets()[j].dx,
                             b1.offsets()[i].dy + b2.offsets()[j].dy};
            sums[{o.dx, o.dy}].push_back(b1.matrix_height(i) + b2.matrix_height(j));
        }
    }
    std::vector<SeOffset> offsets;
    std::vector<Sym2> heights;
    offsets.reserve(sums.size());
    heights.reserve(sums.size());
    bool all_zero = true;
    for (const auto& [key, vals] : sums) {
        offsets.push_back({key.first, key.second});
        const Sym2 h = les(vals, tol);
        all_zero = all_zero && h == Sym2::zero();
        heights.push_back(h);
    }
    if (all_zero) {
        return StructuringElement::flat(std::move(offsets));
    }
    return StructuringElement::with_matrix_heights(std::move(offsets), std::move(heights));
}

GreyImage::GreyImage(int w, int h, double fill)
    : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
}

ColorImage::ColorImage(int w, int h, const RgbColor& fill)
    : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
}

namespace {

void check_grey_se(const StructuringElement& b) {
    if (b.has_matrix_heights()) {
        throw std::invalid_argument("grey operator: element carries matrix heights");
    }
}

void check_color_se(const StructuringElement& b) {
    if (b.has_grey_heights()) {
        throw std::invalid_argument("colour operator: element carries scalar heights");
    }
}

}  // namespace

GreyImage grey_dilate(const GreyImage& f, const StructuringElement& b) {
    check_grey_se(b);
    GreyImage out(f.width, f.height);
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) {
            double best = -std::numeric_limits<double>::infinity();
            bool seen = false;
            for (size_t k = 0; k < b.offsets().size(); ++k) {
                const int sx = x - b.offsets()[k].dx;
                const int sy = y - b.offsets()[k].dy;
                if (!f.contains(sx, sy)) continue;
                best = std::max(best, f.at(sx, sy) + b.grey_height(k));
                seen = true;
            }
            if (!seen) {
                throw std::invalid_argument("grey_dilate: empty window at a pixel");
            }
            out.at(x, y) = best;
        }
    }
    return out;
}

GreyImage grey_erode(const GreyImage& f, const StructuringElement& b) {
    check_grey_se(b);
    GreyImage out(f.width, f.height);
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) {
            double best = std::numeric_limits<double>::infinity();
            bool seen = false;
            for (size_t k = 0; k < b.offsets().size(); ++k) {
                const int sx = x + b.offsets()[k].dx;
                const int sy = y + b.offsets()[k].dy;
                if (!f.contains(sx, sy)) continue;
                best = std::min(best, f.at(sx, sy) - b.grey_height(k));
                seen = true;
            }
            if (!seen) {
                throw std::invalid_argument("grey_erode: empty window at a pixel");
            }
            out.at(x, y) = best;
        }
    }
    return out;
}

GreyImage complement(const GreyImage& f, double lo, double hi) {
    GreyImage out(f.width, f.height);
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        const double v = f.pixels[i];
        if (v < lo || v > hi) {
            throw std::invalid_argument("complement: range does not enclose the pixel values");
        }
        out.pixels[i] = hi - v + lo;
    }
    return out;
}

ColorImage complement(const ColorImage& f, const std::array<std::pair<double, double>, 3>& ranges) {
    ColorImage out(f.width, f.height);
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        const RgbColor& v = f.pixels[i];
        const std::array<double, 3> ch{v.r, v.g, v.b};
        std::array<double, 3> res{};
        for (int c = 0; c < 3; ++c) {
            const auto [lo, hi] = ranges[c];
            if (ch[c] < lo || ch[c] > hi) {
                throw std::invalid_argument("complement: range does not enclose the pixel values");
            }
            res[c] = hi - ch[c] + lo;
        }
        out.pixels[i] = {res[0], res[1], res[2]};
    }
    return out;
}

ColorImage complement(const ColorImage& f, double lo, double hi) {
    return complement(f, std::array{std::pair{lo, hi}, std::pair{lo, hi}, std::pair{lo, hi}});
}

namespace {

ColorImage sup_dilate(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                      bool relaxed) {
    check_color_se(b);
    // Pixels are converted once; the per-pixel windows then only gather.
    std::vector<Sym2> mats(f.pixels.size());
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        mats[i] = rgb_to_matrix(f.pixels[i]);
    }
    ColorImage out(f.width, f.height);
    std::vector<Sym2> window;
    window.reserve(b.offsets().size());
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) {
            window.clear();
            for (size_t k = 0; k < b.offsets().size(); ++k) {
                const int sx = x - b.offsets()[k].dx;
                const int sy = y - b.offsets()[k].dy;
                if (!f.contains(sx, sy)) continue;
                Sym2 v = mats[static_cast<size_t>(sy) * f.width + sx];
                if (!b.is_flat()) v = v + b.matrix_height(k);
                window.push_back(v);
            }
            if (window.empty()) {
                throw std::invalid_argument("colour dilation: empty window at a pixel");
            }
            const Sym2 s = relaxed ? rles(window, tol) : les(window, tol);
            out.at(x, y) = matrix_to_rgb(s);
        }
    }
    return out;
}

std::array<std::pair<double, double>, 3> complement_ranges(const ColorImage& f, RangeMode range) {
    if (range == RangeMode::fixed_unit) {
        return {std::pair{0.0, 1.0}, std::pair{0.0, 1.0}, std::pair{0.0, 1.0}};
    }
    std::array<std::pair<double, double>, 3> r;
    r.fill({std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()});
    for (const RgbColor& v : f.pixels) {
        const std::array<double, 3> ch{v.r, v.g, v.b};
        for (int c = 0; c < 3; ++c) {
            r[c].first = std::min(r[c].first, ch[c]);
            r[c].second = std::max(r[c].second, ch[c]);
        }
    }
    return r;
}

ColorImage sup_erode(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                     RangeMode range, bool relaxed) {
    const auto ranges = complement_ranges(f, range);
    return complement(sup_dilate(complement(f, ranges), b, tol, relaxed), ranges);
}

}  // namespace

ColorImage les_dilate(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol) {
    return sup_dilate(f, b, tol, false);
}

ColorImage les_erode(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                     RangeMode range) {
    return sup_erode(f, b, tol, range, false);
}

ColorImage les_open(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                    RangeMode range) {
    return les_dilate(les_erode(f, b, tol, range), b, tol);
}

ColorImage les_close(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                     RangeMode range) {
    return les_erode(les_dilate(f, b, tol), b, tol, range);
}

ColorImage rles_dilate(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol) {
    return sup_dilate(f, b, tol, true);
}

ColorImage rles_erode(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                      RangeMode range) {
    return sup_erode(f, b, tol, range, true);
}

ColorImage rles_open(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                     RangeMode range) {
    return rles_dilate(rles_erode(f, b, tol, range), b, tol);
}

ColorImage rles_close(const ColorImage& f, const StructuringElement& b, const SupTolerances& tol,
                      RangeMode range) {
    return rles_erode(rles_dilate(f, b, tol), b, tol, range);
}

}  // namespace lesmorph
