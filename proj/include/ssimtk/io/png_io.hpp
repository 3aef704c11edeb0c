#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssimtk/color.hpp"
#include "ssimtk/gray_image.hpp"
#include "ssimtk/heatmap.hpp"

namespace ssimtk::io {

/// Decoded 8-bit PNG: `gray` holds one byte per pixel when the file was a
/// grayscale image, otherwise `rgb` holds interleaved RGB. Palette files are
/// expanded, alpha is stripped, and 16-bit files are rejected.
struct PngImage {
    int width = 0;
    int height = 0;
    bool is_gray = false;
    std::vector<std::uint8_t> gray;
    std::vector<std::uint8_t> rgb;
};

PngImage load_png(const std::string& path);

/// Canonical [0, 1] views of a decoded file: v / 255 per channel.
GrayImage to_gray_image(const PngImage& png);
RgbImage to_rgb_image(const PngImage& png);

/// 8-bit grayscale output; canonical values are quantized round-half-up.
void write_gray_png(const std::string& path, const GrayImage& img);

/// 8-bit RGB output of a rendered heatmap.
void write_rgb_png(const std::string& path, const Heatmap& map);

} // namespace ssimtk::io
