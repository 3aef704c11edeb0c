#include "ssimtk/io/raw_map.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ssimtk::io {

namespace {

static_assert(std::endian::native == std::endian::little,
              "raw map I/O assumes a little-endian host");

void append_u32(std::string& buf, std::uint32_t v) {
    char bytes[4];
    std::memcpy(bytes, &v, 4);
    buf.append(bytes, 4);
}

} // namespace

void write_raw_map(const std::string& path, const std::vector<double>& map, int width,
                   int height) {
    if (map.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("write_raw_map: map size disagrees with dimensions");

    std::string buf;
    buf.reserve(8 + map.size() * sizeof(double));
    append_u32(buf, static_cast<std::uint32_t>(width));
    append_u32(buf, static_cast<std::uint32_t>(height));
    buf.append(reinterpret_cast<const char*>(map.data()), map.size() * sizeof(double));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

RawMap read_raw_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open");

    std::uint32_t dims[2];
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in)
        throw std::runtime_error(path + ": truncated header");

    RawMap out;
    out.width = static_cast<int>(dims[0]);
    out.height = static_cast<int>(dims[1]);
    const std::size_t n = static_cast<std::size_t>(out.width) * out.height;
    out.values.resize(n);
    in.read(reinterpret_cast<char*>(out.values.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in)
        throw std::runtime_error(path + ": truncated payload");
    return out;
}

} // namespace ssimtk::io
