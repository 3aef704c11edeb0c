#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ssimtk {

/// Single-channel intensity field, row-major. The canonical representation
/// keeps samples in [0, 1]; 8-bit mode keeps raw values in [0, 255] and sets
/// the dynamic range L = 255 in SsimParams to match.
class GrayImage {
public:
    GrayImage() = default;

    GrayImage(int width, int height, double fill = 0.0)
        : width_(width), height_(height) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
        data_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    GrayImage(int width, int height, std::vector<double> data)
        : width_(width), height_(height), data_(std::move(data)) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
        if (data_.size() != static_cast<std::size_t>(width) * height)
            throw std::invalid_argument("GrayImage: data length != width * height");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    double& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    double at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    bool same_size(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Checks the input contract: every sample finite and inside [0, L].
/// Throws std::invalid_argument naming the first offending pixel.
void check_image_range(const GrayImage& img, double dynamic_range);

} // namespace ssimtk
