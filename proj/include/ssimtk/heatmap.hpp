#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace ssimtk {

struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

struct LegendAnchor {
    const char* label;
    double value; ///< NaN for the undefined sentinel
    Rgb color;
};

/// Rendered map image plus the value->color anchors for the legend.
struct Heatmap {
    int width = 0;
    int height = 0;
    std::vector<double> r;
    std::vector<double> g;
    std::vector<double> b;
    std::vector<LegendAnchor> legend;

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

/// Map visualization convention: values in [0, 1] are the achromatic ramp
/// (v, v, v); strictly negative values interpolate linearly in RGB from
/// green at 0- to red at -1; undefined pixels get the pure-blue sentinel,
/// which no value on the ramp can produce. Values outside [-1, 1] beyond a
/// 1e-9 rounding slack are rejected.
Heatmap render(const std::vector<double>& map, const std::vector<std::uint8_t>& undefined_mask,
               int width, int height);

/// The anchor set embedded in every rendered legend.
std::vector<LegendAnchor> heatmap_legend();

} // namespace ssimtk
