#pragma once

#include <string>
#include <vector>

namespace ssimtk::io {

/// Cross-language map dump: little-endian uint32 width, uint32 height, then
/// width*height little-endian IEEE-754 doubles in row-major order.
/// Undefined pixels are stored as quiet NaN.
void write_raw_map(const std::string& path, const std::vector<double>& map, int width,
                   int height);

struct RawMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;
};

RawMap read_raw_map(const std::string& path);

} // namespace ssimtk::io
