#pragma once

#include <vector>

namespace ssimtk {

/// Square, normalized, reflection-symmetric convolution window.
class Kernel {
public:
    /// Isotropic Gaussian exp(-(dx^2+dy^2)/(2*sigma^2)) sampled at integer
    /// offsets from the center and normalized to sum 1. Size must be odd.
    static Kernel gaussian(int size, double sigma);

    /// Uniform (box) window of the same footprint, weights 1/size^2.
    static Kernel box(int size);

    int size() const { return size_; }
    int radius() const { return size_ / 2; }

    /// Weight at window position (i, j), 0-based row/column.
    double at(int i, int j) const { return weights_[static_cast<std::size_t>(i) * size_ + j]; }

    const std::vector<double>& weights() const { return weights_; }

    double sum() const;

private:
    Kernel(int size, std::vector<double> weights)
        : size_(size), weights_(std::move(weights)) {}

    int size_ = 0;
    std::vector<double> weights_;
};

} // namespace ssimtk
