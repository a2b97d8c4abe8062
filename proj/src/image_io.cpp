#include "lesmorph/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace lesmorph {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

std::uint8_t quantise_channel(double v) {
    const long q = std::lround(255.0 * std::clamp(v, 0.0, 1.0));
    return static_cast<std::uint8_t>(std::clamp(q, 0L, 255L));
}

Png read_png(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng initialisation failed");
    }
    std::vector<std::vector<png_byte>> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("'" + path + "' is not a decodable PNG");
    }
    png_init_io(png, file.get());
    png_read_info(png, info);

    png_set_expand(png);  // palette/grey/low-depth -> 8-bit RGB(A)
    if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
    if (png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY ||
        png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_read_update_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int channels = png_get_channels(png, info);
    if (w == 0 || h == 0 || (channels != 3 && channels != 4)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("'" + path + "': unsupported PNG layout");
    }

    rows.assign(h, std::vector<png_byte>(png_get_rowbytes(png, info)));
    std::vector<png_bytep> row_ptrs(h);
    for (png_uint_32 y = 0; y < h; ++y) row_ptrs[y] = rows[y].data();
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Png out;
    out.image = ColorImage(static_cast<int>(w), static_cast<int>(h));
    if (channels == 4) out.alpha.resize(static_cast<size_t>(w) * h);
    for (png_uint_32 y = 0; y < h; ++y) {
        for (png_uint_32 x = 0; x < w; ++x) {
            const png_byte* px = &rows[y][static_cast<size_t>(x) * channels];
            out.image.at(static_cast<int>(x), static_cast<int>(y)) = {
                px[0] / 255.0, px[1] / 255.0, px[2] / 255.0};
            if (channels == 4) out.alpha[static_cast<size_t>(y) * w + x] = px[3];
        }
    }
    return out;
}

void write_png(const std::string& path, const Png& png_data) {
    const ColorImage& img = png_data.image;
    if (img.width <= 0 || img.height <= 0) {
        throw IoError("write_png: empty image");
    }
    if (png_data.has_alpha() && png_data.alpha.size() != img.pixels.size()) {
        throw IoError("write_png: alpha plane does not match the image");
    }
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng initialisation failed");
    }
    // volatile: must survive the longjmp from libpng's error handler
    const volatile int channels = png_data.has_alpha() ? 4 : 3;
    std::vector<png_byte> rowbuf(static_cast<size_t>(img.width) * channels);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("failed writing '" + path + "'");
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, img.width, img.height, 8,
                 channels == 4 ? PNG_COLOR_TYPE_RGBA : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const RgbColor& c = img.at(x, y);
            png_byte* px = &rowbuf[static_cast<size_t>(x) * channels];
            px[0] = quantise_channel(c.r);
            px[1] = quantise_channel(c.g);
            px[2] = quantise_channel(c.b);
            if (channels == 4) px[3] = png_data.alpha[static_cast<size_t>(y) * img.width + x];
        }
        png_write_row(png, rowbuf.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace lesmorph
