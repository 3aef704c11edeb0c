#pragma once

#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/kernel.hpp"

namespace ssimtk {

/// Per-pixel weighted patch statistics on the valid grid. Only window
/// positions fully inside both images are produced, so a border of
/// (window size / 2) pixels is removed on each side.
struct LocalStats {
    int width = 0;  ///< valid width  = image width  - 2 * radius
    int height = 0; ///< valid height = image height - 2 * radius
    std::vector<double> mean_a;
    std::vector<double> mean_b;
    std::vector<double> var_a; ///< >= 0 (tiny negative rounding residues clamped)
    std::vector<double> var_b;
    std::vector<double> cov;

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

/// Weighted mean/variance/covariance per valid pixel:
///   mu    = sum w*p
///   var   = sum w*p^2 - mu^2   (clamped at 0)
///   cov   = sum w*(a*b) - muA*muB
/// Throws on dimension mismatch or an image smaller than the window.
LocalStats local_stats(const GrayImage& a, const GrayImage& b, const Kernel& kernel);

} // namespace ssimtk
