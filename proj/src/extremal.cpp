#include "ssimtk/extremal.hpp"

#include <cmath>
#include <stdexcept>

#include "ssimtk/patterns.hpp"
#include "ssimtk/ssim.hpp"

namespace ssimtk {

ComponentMinima component_minima(const SsimParams& params) {
    params.validate();
    const double k1sq = params.k1 * params.k1;
    const double k2sq = params.k2 * params.k2;
    ComponentMinima out;
    out.l_min = k1sq / (k1sq + 1.0);
    out.c_min = k2sq / (k2sq + 0.25);
    out.s_min = (2.0 * k2sq - 1.0) / (2.0 * k2sq + 1.0);
    out.params = params;
    return out;
}

std::pair<GrayImage, GrayImage> witness_pair(SsimComponent which, int size) {
    switch (which) {
    case SsimComponent::Luminance:
        return {constant(size, size, 0.0), constant(size, size, 1.0)};
    case SsimComponent::Contrast:
        return {constant(size, size, 128.0 / 255.0), checkerboard(size, size, 0.0, 1.0)};
    case SsimComponent::Structure:
        return {checkerboard(size, size, 0.0, 1.0), checkerboard(size, size, 1.0, 0.0)};
    }
    throw std::invalid_argument("witness_pair: unknown component");
}

HazardReport undefined_scan(const std::vector<double>& s_map, int width, int height,
                            double gamma) {
    if (s_map.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("undefined_scan: map size disagrees with dimensions");

    HazardReport report;
    report.gamma_is_integer = is_integer_exponent(gamma);
    if (report.gamma_is_integer) {
        report.fraction = 0.0;
        return report;
    }
    for (std::size_t i = 0; i < s_map.size(); ++i) {
        if (s_map[i] < 0.0 || std::isnan(s_map[i])) {
            if (report.count == 0) {
                report.first_x = static_cast<int>(i) % width;
                report.first_y = static_cast<int>(i) / width;
            }
            ++report.count;
        }
    }
    report.fraction =
        s_map.empty() ? 0.0 : static_cast<double>(report.count) / static_cast<double>(s_map.size());
    return report;
}

BrunetMaps brunet_distances(const LocalStats& stats, const SsimParams& params) {
    const std::vector<double> l = luminance_component(stats, params);
    const std::vector<double> c = contrast_component(stats, params);
    const std::vector<double> s = structure_component(stats, params);

    BrunetMaps out;
    out.width = stats.width;
    out.height = stats.height;
    out.d_l.resize(stats.size());
    out.d_cs.resize(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) {
        out.d_l[i] = std::sqrt(std::max(1.0 - l[i], 0.0));
        out.d_cs[i] = std::sqrt(std::max(1.0 - c[i] * s[i], 0.0));
    }
    return out;
}

} // namespace ssimtk
