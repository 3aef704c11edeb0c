#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/local_stats.hpp"
#include "ssimtk/params.hpp"

namespace ssimtk {

/// Closed-form minima of the three SSIM factors over admissible inputs.
/// All three are independent of the dynamic range L:
///   l_min = K1^2 / (K1^2 + 1)
///   c_min = K2^2 / (K2^2 + 1/4)
///   s_min = (2*K2^2 - 1) / (2*K2^2 + 1)
struct ComponentMinima {
    double l_min = 0.0;
    double c_min = 0.0;
    double s_min = 0.0;
    SsimParams params;
};

ComponentMinima component_minima(const SsimParams& params);

enum class SsimComponent { Luminance, Contrast, Structure };

/// Image pair driving one component to (or next to) its minimum:
///   luminance: black vs white constants (attains l_min exactly);
///   contrast:  mid-gray 128/255 vs a pixel checkerboard;
///   structure: a checkerboard vs its inversion.
/// The checkerboard witnesses attain the minima exactly under uniform
/// weighting and approach them under the Gaussian window.
std::pair<GrayImage, GrayImage> witness_pair(SsimComponent which, int size);

/// Undefined-exponentiation hazard scan of a structure map.
struct HazardReport {
    std::int64_t count = 0;
    double fraction = 0.0;
    bool gamma_is_integer = false;
    int first_x = -1; ///< valid-grid coordinates of the first hazard, -1 if none
    int first_y = -1;
};

/// Counts pixels whose s < 0 when `gamma` is non-integer (those pixels have
/// no real s^gamma). Integer gamma scans report zero hazards.
HazardReport undefined_scan(const std::vector<double>& s_map, int width, int height,
                            double gamma);

/// Metric transforms of the SSIM factors: d_l = sqrt(1 - l) and
/// d_cs = sqrt(1 - c*s), both clamped at 0 against rounding. d_l is
/// algebraically |muA - muB| / sqrt(muA^2 + muB^2 + C1).
struct BrunetMaps {
    int width = 0;
    int height = 0;
    std::vector<double> d_l;
    std::vector<double> d_cs;
};

BrunetMaps brunet_distances(const LocalStats& stats, const SsimParams& params);

} // namespace ssimtk
