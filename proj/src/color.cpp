#include "ssimtk/color.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ssimtk {

RgbImage::RgbImage(int w, int h, double fr, double fg, double fb) : width(w), height(h) {
    if (w <= 0 || h <= 0)
        throw std::invalid_argument("RgbImage: dimensions must be positive");
    const std::size_t n = static_cast<std::size_t>(w) * h;
    r.assign(n, fr);
    g.assign(n, fg);
    b.assign(n, fb);
}

double quantize_unit_to_8bit(double v) {
    const double q = std::floor(v * 255.0 + 0.5);
    return std::clamp(q, 0.0, 255.0) / 255.0;
}

GrayImage rgb_to_gray(const RgbImage& img, const GrayCoeffs& coeffs, bool quantize_8bit) {
    if (coeffs.r < 0.0 || coeffs.g < 0.0 || coeffs.b < 0.0)
        throw std::invalid_argument("rgb_to_gray: coefficients must be non-negative");
    GrayImage out(img.width, img.height);
    auto data = out.data();
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double y = coeffs.r * img.r[i] + coeffs.g * img.g[i] + coeffs.b * img.b[i];
        data[i] = quantize_8bit ? quantize_unit_to_8bit(y) : y;
    }
    return out;
}

namespace {

// Full-range BT.601, chroma shifted into [0, 1]. The chroma coefficient rows
// sum to zero, so neutral (r = g = b) inputs land exactly on 0.5.
void to_ycbcr(const RgbImage& img, GrayImage& y, GrayImage& cb, GrayImage& cr) {
    auto yd = y.data();
    auto cbd = cb.data();
    auto crd = cr.data();
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double r = img.r[i], g = img.g[i], b = img.b[i];
        yd[i] = 0.299 * r + 0.587 * g + 0.114 * b;
        cbd[i] = std::clamp(-0.168736 * r - 0.331264 * g + 0.5 * b + 0.5, 0.0, 1.0);
        crd[i] = std::clamp(0.5 * r - 0.418688 * g - 0.081312 * b + 0.5, 0.0, 1.0);
    }
}

} // namespace

YcbcrSsimResult weighted_ycbcr_ssim(const RgbImage& a, const RgbImage& b,
                                    const SsimParams& params) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("weighted_ycbcr_ssim: image dimensions differ");
    if (params.dynamic_range != 1.0)
        throw std::invalid_argument("weighted_ycbcr_ssim: channel statistics run on the "
                                    "canonical [0, 1] representation; set L = 1");

    GrayImage ya(a.width, a.height), cba(a.width, a.height), cra(a.width, a.height);
    GrayImage yb(b.width, b.height), cbb(b.width, b.height), crb(b.width, b.height);
    to_ycbcr(a, ya, cba, cra);
    to_ycbcr(b, yb, cbb, crb);

    YcbcrSsimResult out;
    out.report_y = compare(ya, yb, params);
    out.report_cr = compare(cra, crb, params);
    out.report_cb = compare(cba, cbb, params);
    out.mssim_y = out.report_y.mssim;
    out.mssim_cr = out.report_cr.mssim;
    out.mssim_cb = out.report_cb.mssim;
    out.weighted = 0.8 * out.mssim_y + 0.1 * out.mssim_cr + 0.1 * out.mssim_cb;
    return out;
}

namespace {

// Grayscale-path MSSIM of a constant color against white (Rec. 601 +
// quantization, the default file pipeline). Constant fields only need a
// single fully covered window.
double gray_path_mssim_vs_white(double r, double g, double b, const SsimParams& params) {
    const int n = params.window_size;
    RgbImage probe(n, n, r, g, b);
    RgbImage white(n, n, 1.0, 1.0, 1.0);
    GrayImage gp = rgb_to_gray(probe, kGrayCoeffsRec601, true);
    GrayImage gw = rgb_to_gray(white, kGrayCoeffsRec601, true);
    if (params.dynamic_range != 1.0) {
        for (double& v : gp.data())
            v *= params.dynamic_range;
        for (double& v : gw.data())
            v *= params.dynamic_range;
    }
    return compare(gp, gw, params).mssim;
}

RgbImage constant_color(int size, RgbChannel channel, double c) {
    double r = 1.0, g = 1.0, b = 1.0;
    switch (channel) {
    case RgbChannel::R: r = c; break;
    case RgbChannel::G: g = c; break;
    case RgbChannel::B: b = c; break;
    }
    return RgbImage(size, size, r, g, b);
}

} // namespace

RgbImage equiluminant_probe(RgbChannel channel, double target_mssim) {
    return equiluminant_probe(channel, target_mssim, SsimParams{});
}

RgbImage equiluminant_probe(RgbChannel channel, double target_mssim,
                            const SsimParams& params) {
    params.validate();
    if (!(target_mssim > 0.0 && target_mssim < 1.0))
        throw std::invalid_argument("equiluminant_probe: target must lie in (0, 1)");

    auto eval = [&](double c) {
        const RgbImage img = constant_color(params.window_size, channel, c);
        return gray_path_mssim_vs_white(img.r[0], img.g[0], img.b[0], params);
    };

    constexpr double kTolerance = 5e-4;
    const double floor_mssim = eval(0.0);
    if (target_mssim < floor_mssim)
        throw std::runtime_error(
            "equiluminant_probe: target " + std::to_string(target_mssim)
            + " unreachable; this channel only reaches down to " + std::to_string(floor_mssim));

    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double v = eval(mid);
        if (std::abs(v - target_mssim) < kTolerance)
            return constant_color(1, channel, mid);
        if (v < target_mssim)
            lo = mid;
        else
            hi = mid;
    }
    throw std::runtime_error("equiluminant_probe: bisection failed to reach the target within "
                             + std::to_string(kTolerance));
}

} // namespace ssimtk
