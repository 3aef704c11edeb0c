#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/local_stats.hpp"
#include "ssimtk/params.hpp"

namespace ssimtk {

/// Local MSE on the SSIM footprint, via the statistics identity
///   MSE* = varA + varB - 2*cov + (muA - muB)^2,
/// which equals the window-weighted mean of (a - b)^2.
std::vector<double> local_mse(const LocalStats& stats);

/// SSIM with the stabilizing constants removed (the pre-constant form).
/// 0/0 in the luminance factor is 1; in the contrast-structure factor it is
/// 1 only when the two flat patches carry the same mean, otherwise the pixel
/// is the division-by-zero the constants were introduced to avoid and is
/// flagged undefined (NaN).
struct StarMaps {
    int width = 0;
    int height = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> undefined;
    double pooled = 0.0; ///< mean over defined pixels, NaN if none
    std::int64_t defined_count = 0;
};

StarMaps ssim_star(const LocalStats& stats);

/// Least-squares fit quality of MSE* as a function of SSIM*. r_squared is
/// the quadratic model in (1 - SSIM*); the plain linear fit is reported
/// alongside for transparency.
struct CorrelationReport {
    double r_squared = 0.0;
    double linear_r_squared = 0.0;
    std::int64_t samples = 0;
    double coeff_const = 0.0; ///< quadratic model: c0 + c1*x + c2*x^2, x = 1 - SSIM*
    double coeff_linear = 0.0;
    double coeff_quadratic = 0.0;
};

/// Throws std::invalid_argument with fewer than 3 sample pairs.
CorrelationReport correlate(std::span<const double> ssim_star_values,
                            std::span<const double> mse_star_values);

/// 10*log10(L^2 / global MSE). Identical images have no finite PSNR; that is
/// reported as a distinct signal, never as a number.
struct PsnrResult {
    bool infinite = false;
    double db = 0.0;
};

PsnrResult psnr(const GrayImage& a, const GrayImage& b, double dynamic_range = 1.0);

/// One entry of the deterministic distortion corpus used for the SSIM*/MSE*
/// correspondence checks.
struct CorpusPair {
    std::string label;
    GrayImage a;
    GrayImage b;
};

/// Fixed, seeded corpus: a smooth synthetic base distorted by centered noise
/// (eight amplitudes), repeated box blur, checkerboard dither, and small
/// luminance shifts. Twenty pairs, byte-stable across runs.
std::vector<CorpusPair> distortion_corpus();

/// Pooled SSIM*/MSE*/PSNR summary of the corpus plus the fitted reports:
/// one over per-pair pooled values, one over all defined windows.
struct CorpusAnalysis {
    std::vector<double> pooled_ssim_star;
    std::vector<double> pooled_mse_star;
    std::vector<double> psnr_db;
    std::vector<double> mean_abs_delta; ///< |mean(a) - mean(b)| per pair
    CorrelationReport pooled_fit;
    CorrelationReport local_fit;
    double psnr_linear_r_squared = 0.0; ///< over pairs with equal means and SSIM* in [0.2, 0.8]
    std::int64_t psnr_samples = 0;
};

CorpusAnalysis analyze_corpus(const std::vector<CorpusPair>& corpus, const SsimParams& params);

} // namespace ssimtk
