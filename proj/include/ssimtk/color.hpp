#pragma once

#include <string>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/params.hpp"
#include "ssimtk/ssim.hpp"

namespace ssimtk {

/// Planar RGB in [0, 1], assumed sRGB-encoded (no linearization anywhere).
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> r;
    std::vector<double> g;
    std::vector<double> b;

    RgbImage() = default;
    RgbImage(int w, int h, double fr = 0.0, double fg = 0.0, double fb = 0.0);

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

struct GrayCoeffs {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

/// Coefficients as printed in the source material (green 0.5810)...
inline constexpr GrayCoeffs kGrayCoeffsPaper{0.2989, 0.5810, 0.1140};
/// ...and the standard Rec. 601 set used by common rgb2gray pipelines.
inline constexpr GrayCoeffs kGrayCoeffsRec601{0.2989, 0.5870, 0.1140};

/// Y = cr*r + cg*g + cb*b per pixel. With quantize_8bit the result passes
/// through the 8-bit stage (scale by 255, round half up, divide by 255),
/// mimicking a file-based grayscale conversion.
GrayImage rgb_to_gray(const RgbImage& img, const GrayCoeffs& coeffs, bool quantize_8bit);

/// Round-half-up quantization of one canonical value to the 0..255 grid.
double quantize_unit_to_8bit(double v);

/// Weighted multi-channel SSIM: full-range BT.601 YCbCr transform (chroma
/// shifted to [0, 1]), per-channel compare, then
/// 0.8*SSIM_Y + 0.1*SSIM_Cr + 0.1*SSIM_Cb.
struct YcbcrSsimResult {
    double weighted = 0.0;
    double mssim_y = 0.0;
    double mssim_cr = 0.0;
    double mssim_cb = 0.0;
    ComparisonResult report_y;
    ComparisonResult report_cr;
    ComparisonResult report_cb;
};

YcbcrSsimResult weighted_ycbcr_ssim(const RgbImage& a, const RgbImage& b,
                                    const SsimParams& params);

enum class RgbChannel { R, G, B };

/// Bisects one channel of a constant color against white until the
/// grayscale-path MSSIM is within 5e-4 of `target`. The probe runs the
/// default pipeline (Rec. 601 + 8-bit quantization). Throws when the target
/// lies outside the achievable range [mssim(channel = 0), 1).
RgbImage equiluminant_probe(RgbChannel channel, double target_mssim);
RgbImage equiluminant_probe(RgbChannel channel, double target_mssim,
                            const SsimParams& params);

} // namespace ssimtk
