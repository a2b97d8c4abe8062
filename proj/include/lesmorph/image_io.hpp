#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lesmorph/morphology.hpp"

namespace lesmorph {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An 8-bit RGB image plus an optional alpha plane that filters pass
/// through untouched.
struct Png {
    ColorImage image;
    std::vector<std::uint8_t> alpha;  ///< empty when the source had no alpha

    bool has_alpha() const { return !alpha.empty(); }
};

/// Decode an 8-bit PNG. Palette and grey images are expanded to RGB,
/// 16-bit channels are reduced to 8. Throws IoError on failure.
Png read_png(const std::string& path);

/// Encode as 8-bit RGB (or RGBA when alpha is present). Channels are
/// quantised by round-half-away-from-zero of 255 * value after clamping
/// to [0, 1]. Throws IoError on failure.
void write_png(const std::string& path, const Png& png);

/// round(255 * v) with clamping, the quantisation used by write_png.
std::uint8_t quantise_channel(double v);

}  // namespace lesmorph
