#pragma once

// Binary cache of Z(t) on a uniform grid. Layout, all little-endian:
//
//   offset  size  field
//   0       4     magic "ZMC1"
//   4       4     version, uint32 (= 1)
//   8       8     t_start, IEEE-754 double
//   16      8     dt, IEEE-754 double
//   24      8     count, uint64
//   32      8*n   Z values, IEEE-754 double
//
// theta is cheap to recompute, so only Z is stored. The format is fixed and
// shared with external consumers; readers must reject unknown magic/version.

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalab {

struct SampleCache {
    double t_start = 0.0;
    double dt = 0.0;
    std::vector<double> z_values;

    double t_at(std::size_t i) const { return t_start + static_cast<double>(i) * dt; }
};

namespace detail {

static_assert(std::endian::native == std::endian::little,
              "cache I/O assumes a little-endian host");

inline void put_u32(std::string& out, std::uint32_t v) {
    out.append(reinterpret_cast<const char*>(&v), 4);
}
inline void put_u64(std::string& out, std::uint64_t v) {
    out.append(reinterpret_cast<const char*>(&v), 8);
}
inline void put_f64(std::string& out, double v) {
    out.append(reinterpret_cast<const char*>(&v), 8);
}

}  // namespace detail

inline constexpr char kCacheMagic[4] = {'Z', 'M', 'C', '1'};
inline constexpr std::uint32_t kCacheVersion = 1;

inline void write_sample_cache(const std::string& path, const SampleCache& cache) {
    std::string buffer;
    buffer.reserve(32 + 8 * cache.z_values.size());
    buffer.append(kCacheMagic, 4);
    detail::put_u32(buffer, kCacheVersion);
    detail::put_f64(buffer, cache.t_start);
    detail::put_f64(buffer, cache.dt);
    detail::put_u64(buffer, cache.z_values.size());
    for (double z : cache.z_values) detail::put_f64(buffer, z);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("sample cache: cannot open " + path + " for writing");
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (!out) throw std::runtime_error("sample cache: short write to " + path);
}

inline SampleCache read_sample_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("sample cache: cannot open " + path);
    std::array<char, 32> header{};
    in.read(header.data(), header.size());
    if (!in) throw std::runtime_error("sample cache: truncated header in " + path);
    if (std::memcmp(header.data(), kCacheMagic, 4) != 0)
        throw std::runtime_error("sample cache: bad magic in " + path);
    std::uint32_t version = 0;
    std::memcpy(&version, header.data() + 4, 4);
    if (version != kCacheVersion)
        throw std::runtime_error("sample cache: unsupported version " + std::to_string(version));

    SampleCache cache;
    std::uint64_t count = 0;
    std::memcpy(&cache.t_start, header.data() + 8, 8);
    std::memcpy(&cache.dt, header.data() + 16, 8);
    std::memcpy(&count, header.data() + 24, 8);
    cache.z_values.resize(count);
    in.read(reinterpret_cast<char*>(cache.z_values.data()),
            static_cast<std::streamsize>(8 * count));
    if (!in) throw std::runtime_error("sample cache: truncated payload in " + path);
    return cache;
}

}  // namespace zetalab
