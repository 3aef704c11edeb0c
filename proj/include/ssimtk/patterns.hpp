#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/params.hpp"

namespace ssimtk {

GrayImage constant(int width, int height, double value);

/// Pixel-sized checkerboard: (x + y) even -> a, odd -> b.
GrayImage checkerboard(int width, int height, double a, double b);

/// Horizontal linear ramp x / (width - 1) and its exact horizontal mirror.
std::pair<GrayImage, GrayImage> gradient_pair(int width, int height);

/// Checkerboard dither: first = base + amplitude * sign, second uses the
/// inverted sign, both clamped to [0, 1]. sign is +1 on even (x + y) parity.
std::pair<GrayImage, GrayImage> dither_pair(const GrayImage& base, double amplitude);

inline constexpr double kDefaultDitherAmplitude = 6.0 / 255.0;

struct SweepPoint {
    double value = 0.0;
    double mssim = 0.0;
};

/// MSSIM of constant(reference) against constant(v) for v on an even grid
/// over [0, 1], endpoints included. Constant fields are fixed points of the
/// normalized window, so each point equals the closed-form luminance factor.
std::vector<SweepPoint> luminance_sweep(double reference_value, int steps);
std::vector<SweepPoint> luminance_sweep(double reference_value, int steps,
                                        const SsimParams& params);

/// Declarative form of the generators above, as consumed by the CLI.
struct PatternSpec {
    enum class Kind { Constant, Checkerboard, GradientPair, DitherPair, Sweep };
    Kind kind = Kind::Constant;
    int width = 0;
    int height = 0;
    double value_a = 0.0;   ///< constant value / checkerboard "a" / sweep reference
    double value_b = 0.0;   ///< checkerboard "b"
    double amplitude = kDefaultDitherAmplitude;
    int steps = 0;
};

/// Materializes the image(s) a spec describes (one image, or two for the
/// pair kinds). Sweep specs are not image-valued and are rejected here.
std::vector<GrayImage> generate(const PatternSpec& spec);
std::vector<GrayImage> generate(const PatternSpec& spec, const GrayImage& dither_base);

} // namespace ssimtk
