#include "ssimtk/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace ssimtk {

namespace {

void check_size(int size) {
    if (size < 1 || size % 2 == 0)
        throw std::invalid_argument("Kernel: size must be odd and >= 1");
}

} // namespace

Kernel Kernel::gaussian(int size, double sigma) {
    check_size(size);
    if (!(sigma > 0.0))
        throw std::invalid_argument("Kernel: sigma must be > 0");

    const int radius = size / 2;
    std::vector<double> w(static_cast<std::size_t>(size) * size);
    double total = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const double g = std::exp(-(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy)
                                      / (2.0 * sigma * sigma));
            w[static_cast<std::size_t>(dy + radius) * size + (dx + radius)] = g;
            total += g;
        }
    }
    for (double& v : w)
        v /= total;
    return Kernel(size, std::move(w));
}

Kernel Kernel::box(int size) {
    check_size(size);
    std::vector<double> w(static_cast<std::size_t>(size) * size,
                          1.0 / (static_cast<double>(size) * size));
    return Kernel(size, std::move(w));
}

double Kernel::sum() const {
    double total = 0.0;
    for (double v : weights_)
        total += v;
    return total;
}

} // namespace ssimtk
