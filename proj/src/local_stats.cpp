#include "ssimtk/local_stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ssimtk {

void check_image_range(const GrayImage& img, double dynamic_range) {
    const auto data = img.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double v = data[i];
        if (!std::isfinite(v) || v < 0.0 || v > dynamic_range) {
            const int x = static_cast<int>(i % img.width());
            const int y = static_cast<int>(i / img.width());
            throw std::invalid_argument("image sample out of [0, " + std::to_string(dynamic_range)
                                        + "] at (" + std::to_string(x) + ", " + std::to_string(y)
                                        + "): " + std::to_string(v));
        }
    }
}

LocalStats local_stats(const GrayImage& a, const GrayImage& b, const Kernel& kernel) {
    if (!a.same_size(b))
        throw std::invalid_argument("local_stats: image dimensions differ");
    const int size = kernel.size();
    if (a.width() < size || a.height() < size)
        throw std::invalid_argument("local_stats: image smaller than the window ("
                                    + std::to_string(a.width()) + "x" + std::to_string(a.height())
                                    + " vs " + std::to_string(size) + ")");

    const int radius = kernel.radius();
    LocalStats out;
    out.width = a.width() - 2 * radius;
    out.height = a.height() - 2 * radius;
    const std::size_t n = out.size();
    out.mean_a.resize(n);
    out.mean_b.resize(n);
    out.var_a.resize(n);
    out.var_b.resize(n);
    out.cov.resize(n);

    // Fixed row-major summation order inside every window; the product a*b is
    // formed before weighting so the covariance is symmetric in the inputs.
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double sum_a = 0.0, sum_b = 0.0;
            double sum_aa = 0.0, sum_bb = 0.0, sum_ab = 0.0;
            for (int i = 0; i < size; ++i) {
                for (int j = 0; j < size; ++j) {
                    const double w = kernel.at(i, j);
                    const double pa = a.at(x + j, y + i);
                    const double pb = b.at(x + j, y + i);
                    sum_a += w * pa;
                    sum_b += w * pb;
                    sum_aa += w * (pa * pa);
                    sum_bb += w * (pb * pb);
                    sum_ab += w * (pa * pb);
                }
            }
            const std::size_t idx = static_cast<std::size_t>(y) * out.width + x;
            out.mean_a[idx] = sum_a;
            out.mean_b[idx] = sum_b;
            const double var_a = sum_aa - sum_a * sum_a;
            const double var_b = sum_bb - sum_b * sum_b;
            out.var_a[idx] = var_a > 0.0 ? var_a : 0.0;
            out.var_b[idx] = var_b > 0.0 ? var_b : 0.0;
            out.cov[idx] = sum_ab - sum_a * sum_b;
        }
    }
    return out;
}

} // namespace ssimtk
