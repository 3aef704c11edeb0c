#pragma once

#include <cstdint>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/kernel.hpp"
#include "ssimtk/local_stats.hpp"
#include "ssimtk/params.hpp"

namespace ssimtk {

/// Component and combined maps on the valid grid, plus the pooled score.
/// `undefined` marks pixels where an exponentiated factor had no real value;
/// under FlagAndNan those map entries hold NaN and are excluded from the
/// pooled mean, under SignedMagnitude they hold sign(b)*|b|^e and still pool.
struct SsimMaps {
    int width = 0;
    int height = 0;
    std::vector<double> l;
    std::vector<double> c;
    std::vector<double> s;
    std::vector<double> ssim;
    std::vector<std::uint8_t> undefined;
    double mssim = 0.0; ///< NaN when no pixel has a finite value
    std::int64_t defined_count = 0;

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

/// l = (2*muA*muB + C1) / (muA^2 + muB^2 + C1). With C1 = 0 the only zero
/// denominator is muA = muB = 0, which evaluates to 1 (identical patches).
std::vector<double> luminance_component(const LocalStats& stats, const SsimParams& params);

/// c = (2*sigmaA*sigmaB + C2) / (varA + varB + C2), sigma = sqrt(max(var, 0)).
/// With C2 = 0 a zero denominator means both patches are flat: 1.
std::vector<double> contrast_component(const LocalStats& stats, const SsimParams& params);

/// s = (cov + C3) / (sigmaA*sigmaB + C3). With C3 = 0: 0/0 evaluates to 1;
/// a nonzero numerator over a zero denominator yields NaN (undefined pixel,
/// picked up downstream by ssim_full / undefined scans).
std::vector<double> structure_component(const LocalStats& stats, const SsimParams& params);

/// SSIM = l^alpha * c^beta * s^gamma per pixel. A negative factor raised to
/// a non-integer exponent is undefined; the policy in `params` decides
/// whether the pixel is NaN'd, extended as sign(b)*|b|^e, or fatal.
/// Throws std::runtime_error under UndefinedPolicy::Reject, naming the count
/// and first offending location.
SsimMaps ssim_full(const std::vector<double>& l_map, const std::vector<double>& c_map,
                   const std::vector<double>& s_map, int width, int height,
                   const SsimParams& params);

/// The single-fraction form
///   (2*muA*muB + C1)(2*cov + C2) / ((muA^2 + muB^2 + C1)(varA + varB + C2)),
/// algebraically equal to ssim_full at alpha = beta = gamma = 1, C3 = C2/2.
/// Component maps are populated for diagnostics.
SsimMaps ssim_simplified(const LocalStats& stats, const SsimParams& params);

struct PoolResult {
    double mssim = 0.0;
    std::int64_t defined_count = 0;
    std::int64_t undefined_count = 0;
};

/// Arithmetic mean of the map over pixels holding a finite value, reported
/// with the pixel counts. Throws std::runtime_error when nothing is defined.
PoolResult pool_mssim(const SsimMaps& maps);

/// Full pipeline result for one image pair.
struct ComparisonResult {
    SsimMaps maps;
    double mssim = 0.0; ///< NaN when every pixel is undefined
    double mean_l = 0.0;
    double mean_c = 0.0;
    double mean_s = 0.0;
    std::int64_t defined_count = 0;
    std::int64_t undefined_count = 0;
    double undefined_fraction = 0.0;
    SsimParams params;
};

/// Validates inputs, derives the window from `params` (or uses an explicit
/// kernel override), computes local statistics and the full SSIM maps, and
/// pools. Exact pipeline: local_stats -> components -> ssim_full -> pool.
ComparisonResult compare(const GrayImage& a, const GrayImage& b, const SsimParams& params);
ComparisonResult compare(const GrayImage& a, const GrayImage& b, const SsimParams& params,
                         const Kernel& kernel);

} // namespace ssimtk
