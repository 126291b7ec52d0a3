#include "dzk/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dzk {

namespace {

constexpr char kMagic[4] = {'D', 'Z', 'K', 'F'};
constexpr std::uint16_t kVersion = 1;

void put_u16(unsigned char* p, std::uint16_t v) {
    p[0] = v & 0xFF;
    p[1] = (v >> 8) & 0xFF;
}
void put_u32(unsigned char* p, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) p[i] = (v >> (8 * i)) & 0xFF;
}
void put_f64(unsigned char* p, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) p[i] = (bits >> (8 * i)) & 0xFF;
}
std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}
double get_f64(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
    return std::bit_cast<double>(bits);
}

} // namespace

void write_snapshot(const std::filesystem::path& path, const Field& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path.string());

    unsigned char header[32] = {};
    std::memcpy(header, kMagic, 4);
    put_u16(header + 4, kVersion);
    put_u32(header + 6, static_cast<std::uint32_t>(f.grid().nx));
    put_u32(header + 10, static_cast<std::uint32_t>(f.grid().ny));
    put_f64(header + 14, f.grid().lx);
    out.write(reinterpret_cast<const char*>(header), sizeof header);

    std::vector<unsigned char> buf(8 * f.values().size());
    for (std::size_t i = 0; i < f.values().size(); ++i) put_f64(buf.data() + 8 * i, f.values()[i]);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("snapshot: write failed for " + path.string());
}

Field read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path.string());

    unsigned char header[32];
    in.read(reinterpret_cast<char*>(header), sizeof header);
    if (!in || std::memcmp(header, kMagic, 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path.string());
    if (get_u16(header + 4) != kVersion)
        throw std::runtime_error("snapshot: unsupported version in " + path.string());

    const auto nx = static_cast<int>(get_u32(header + 6));
    const auto ny = static_cast<int>(get_u32(header + 10));
    const double lx = get_f64(header + 14);
    Grid g(nx, ny, lx);

    std::vector<unsigned char> buf(8 * static_cast<std::size_t>(g.size()));
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!in) throw std::runtime_error("snapshot: truncated data in " + path.string());

    Field f(g);
    for (std::size_t i = 0; i < f.values().size(); ++i) f.values()[i] = get_f64(buf.data() + 8 * i);
    return f;
}

} // namespace dzk
