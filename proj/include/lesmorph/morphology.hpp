#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "lesmorph/colorspace.hpp"
#include "lesmorph/supremum.hpp"
#include "lesmorph/sym2.hpp"

namespace lesmorph {

struct SeOffset {
    int dx = 0;
    int dy = 0;

    constexpr bool operator==(const SeOffset&) const = default;
};

/// A structuring element: a finite offset set, optionally with additive
/// heights. Grey-scale operators take scalar heights, colour operators take
/// matrix heights (bi-cone displacements mapped through the linear matrix
/// map). A flat element carries no heights at all.
class StructuringElement {
public:
    static StructuringElement flat(std::vector<SeOffset> offsets);
    static StructuringElement with_grey_heights(std::vector<SeOffset> offsets,
                                                std::vector<double> heights);
    static StructuringElement with_matrix_heights(std::vector<SeOffset> offsets,
                                                  std::vector<Sym2> heights);

    const std::vector<SeOffset>& offsets() const { return offsets_; }
    bool is_flat() const { return grey_heights_.empty() && matrix_heights_.empty(); }
    bool has_grey_heights() const { return !grey_heights_.empty(); }
    bool has_matrix_heights() const { return !matrix_heights_.empty(); }

    double grey_height(size_t i) const { return is_flat() ? 0.0 : grey_heights_[i]; }
    Sym2 matrix_height(size_t i) const { return is_flat() ? Sym2::zero() : matrix_heights_[i]; }

    /// The reflected element b(-x); heights follow their offsets.
    StructuringElement reflected() const;

private:
    std::vector<SeOffset> offsets_;
    std::vector<double> grey_heights_;
    std::vector<Sym2> matrix_heights_;
};

enum class SeShape { square, disc, diamond, cross };

/// Flat element of the given shape: square = Chebyshev ball, diamond = L1
/// ball, disc = Euclidean ball of radius r + 0.5, cross = axis offsets.
StructuringElement se_make(SeShape shape, int radius);

/// Element-level dilation used for operator composition: Minkowski sum of
/// the offset sets, with the supremum of the summed heights wherever several
/// offset pairs land on the same composed offset. Flat inputs stay flat.
StructuringElement se_dilate(const StructuringElement& b1, const StructuringElement& b2,
                             const SupTolerances& tol = {});

/// Rectangular grey-scale image, pixel values in [0, 255], row-major.
struct GreyImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    GreyImage() = default;
    GreyImage(int w, int h, double fill = 0.0);
    double& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

/// Rectangular colour image with unit-interval RGB pixels, row-major.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<RgbColor> pixels;

    ColorImage() = default;
    ColorImage(int w, int h, const RgbColor& fill = {});
    RgbColor& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    const RgbColor& at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

/// Grey-scale dilation: per-pixel max of f(x - u) + b(u) over in-domain
/// offsets. Out-of-domain samples are excluded from the window; a pixel
/// whose window is empty raises std::invalid_argument.
GreyImage grey_dilate(const GreyImage& f, const StructuringElement& b);

/// Grey-scale erosion: per-pixel min of f(x + u) - b(u), same boundary rule.
GreyImage grey_erode(const GreyImage& f, const StructuringElement& b);

/// Complement pixel -> hi - pixel + lo. The range must enclose the pixel
/// values. Applying it twice restores the image.
GreyImage complement(const GreyImage& f, double lo, double hi);
ColorImage complement(const ColorImage& f, double lo, double hi);
ColorImage complement(const ColorImage& f, const std::array<std::pair<double, double>, 3>& ranges);

/// Range convention for the complements inside colour erosion: the fixed
/// unit interval per channel, or the per-channel min/max of the input image.
enum class RangeMode { fixed_unit, image_minmax };

/// Colour dilation through the log-exp-supremum: per pixel the supremum of
/// { tau(f(x - u)) + height(u) } over in-domain offsets, mapped back to RGB.
ColorImage les_dilate(const ColorImage& f, const StructuringElement& b,
                      const SupTolerances& tol = {});

/// Colour erosion as complement, dilation, complement.
ColorImage les_erode(const ColorImage& f, const StructuringElement& b,
                     const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);

ColorImage les_open(const ColorImage& f, const StructuringElement& b,
                    const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);
ColorImage les_close(const ColorImage& f, const StructuringElement& b,
                     const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);

/// Variants built on the relaxed supremum; identical to the les forms on
/// generic inputs but continuous in the input data.
ColorImage rles_dilate(const ColorImage& f, const StructuringElement& b,
                       const SupTolerances& tol = {});
ColorImage rles_erode(const ColorImage& f, const StructuringElement& b,
                      const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);
ColorImage rles_open(const ColorImage& f, const StructuringElement& b,
                     const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);
ColorImage rles_close(const ColorImage& f, const StructuringElement& b,
                      const SupTolerances& tol = {}, RangeMode range = RangeMode::fixed_unit);

}  // namespace lesmorph
