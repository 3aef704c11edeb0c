#include "ssimtk/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssimtk/ssim.hpp"

namespace ssimtk {

namespace {

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

void check_intensity(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string("pattern intensity ") + name
                                    + " must lie in [0, 1]");
}

} // namespace

GrayImage constant(int width, int height, double value) {
    check_intensity(value, "value");
    return GrayImage(width, height, value);
}

GrayImage checkerboard(int width, int height, double a, double b) {
    check_intensity(a, "a");
    check_intensity(b, "b");
    GrayImage img(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            img.at(x, y) = ((x + y) % 2 == 0) ? a : b;
    return img;
}

std::pair<GrayImage, GrayImage> gradient_pair(int width, int height) {
    if (width < 2)
        throw std::invalid_argument("gradient_pair: width must be >= 2");
    GrayImage ramp(width, height);
    GrayImage mirror(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double v = static_cast<double>(x) / (width - 1);
            ramp.at(x, y) = v;
            mirror.at(width - 1 - x, y) = v;
        }
    }
    return {std::move(ramp), std::move(mirror)};
}

std::pair<GrayImage, GrayImage> dither_pair(const GrayImage& base, double amplitude) {
    if (amplitude < 0.0)
        throw std::invalid_argument("dither_pair: amplitude must be >= 0");
    GrayImage first(base.width(), base.height());
    GrayImage second(base.width(), base.height());
    for (int y = 0; y < base.height(); ++y) {
        for (int x = 0; x < base.width(); ++x) {
            const double sign = ((x + y) % 2 == 0) ? 1.0 : -1.0;
            first.at(x, y) = clamp01(base.at(x, y) + amplitude * sign);
            second.at(x, y) = clamp01(base.at(x, y) - amplitude * sign);
        }
    }
    return {std::move(first), std::move(second)};
}

std::vector<SweepPoint> luminance_sweep(double reference_value, int steps) {
    return luminance_sweep(reference_value, steps, SsimParams{});
}

std::vector<SweepPoint> luminance_sweep(double reference_value, int steps,
                                        const SsimParams& params) {
    check_intensity(reference_value, "reference");
    if (steps < 2)
        throw std::invalid_argument("luminance_sweep: steps must be >= 2");
    params.validate();

    // A single fully covered window is enough: constant fields are fixed
    // points of the normalized kernel, so the map is one pixel wide anyway.
    const int n = params.window_size;
    const double scale = params.dynamic_range;
    const GrayImage ref(n, n, reference_value * scale);

    std::vector<SweepPoint> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double v = static_cast<double>(i) / (steps - 1);
        const GrayImage probe(n, n, v * scale);
        out.push_back({v, compare(ref, probe, params).mssim});
    }
    return out;
}

std::vector<GrayImage> generate(const PatternSpec& spec) {
    switch (spec.kind) {
    case PatternSpec::Kind::Constant:
        return {constant(spec.width, spec.height, spec.value_a)};
    case PatternSpec::Kind::Checkerboard:
        return {checkerboard(spec.width, spec.height, spec.value_a, spec.value_b)};
    case PatternSpec::Kind::GradientPair: {
        auto [a, b] = gradient_pair(spec.width, spec.height);
        std::vector<GrayImage> out;
        out.push_back(std::move(a));
        out.push_back(std::move(b));
        return out;
    }
    case PatternSpec::Kind::DitherPair:
        throw std::invalid_argument("generate: dither-pair needs a base image");
    case PatternSpec::Kind::Sweep:
        throw std::invalid_argument("generate: sweep specs do not produce images");
    }
    throw std::invalid_argument("generate: unknown pattern kind");
}

std::vector<GrayImage> generate(const PatternSpec& spec, const GrayImage& dither_base) {
    if (spec.kind != PatternSpec::Kind::DitherPair)
        return generate(spec);
    auto [a, b] = dither_pair(dither_base, spec.amplitude);
    std::vector<GrayImage> out;
    out.push_back(std::move(a));
    out.push_back(std::move(b));
    return out;
}

} // namespace ssimtk
