#include "ssimtk/heatmap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ssimtk {

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr Rgb kUndefinedSentinel{0.0, 0.0, 1.0};

} // namespace

std::vector<LegendAnchor> heatmap_legend() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {
        {"one", 1.0, {1.0, 1.0, 1.0}},
        {"zero", 0.0, {0.0, 0.0, 0.0}},
        {"negative-limit-at-zero", -0.0, {0.0, 1.0, 0.0}},
        {"minus-one", -1.0, {1.0, 0.0, 0.0}},
        {"undefined", nan, kUndefinedSentinel},
    };
}

Heatmap render(const std::vector<double>& map, const std::vector<std::uint8_t>& undefined_mask,
               int width, int height) {
    const std::size_t n = static_cast<std::size_t>(width) * height;
    if (map.size() != n)
        throw std::invalid_argument("render: map size disagrees with dimensions");
    if (!undefined_mask.empty() && undefined_mask.size() != n)
        throw std::invalid_argument("render: mask size disagrees with dimensions");

    Heatmap out;
    out.width = width;
    out.height = height;
    out.r.resize(n);
    out.g.resize(n);
    out.b.resize(n);
    out.legend = heatmap_legend();

    for (std::size_t i = 0; i < n; ++i) {
        const bool undefined = (!undefined_mask.empty() && undefined_mask[i]) || std::isnan(map[i]);
        if (undefined) {
            out.r[i] = kUndefinedSentinel.r;
            out.g[i] = kUndefinedSentinel.g;
            out.b[i] = kUndefinedSentinel.b;
            continue;
        }
        double v = map[i];
        if (v < -1.0 - kRangeSlack || v > 1.0 + kRangeSlack)
            throw std::invalid_argument("render: map value out of [-1, 1] at index "
                                        + std::to_string(i) + ": " + std::to_string(v));
        if (v > 1.0) v = 1.0;
        if (v < -1.0) v = -1.0;

        if (v >= 0.0) {
            out.r[i] = v;
            out.g[i] = v;
            out.b[i] = v;
        } else {
            // Linear RGB between green at 0- and red at -1.
            const double t = -v;
            out.r[i] = t;
            out.g[i] = 1.0 - t;
            out.b[i] = 0.0;
        }
    }
    return out;
}

} // namespace ssimtk
