#include "bozk/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "bozk/grid.hpp"

namespace bozk {

namespace {

constexpr char kMagic[8] = {'B', 'O', 'Z', 'K', 'F', 'L', 'D', '1'};

void put_u32(std::string& buf, uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double d) {
    uint64_t v;
    std::memcpy(&v, &d, 8);
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

uint32_t get_u32(const unsigned char* p) {
    return uint32_t(p[0]) | (uint32_t(p[1]) << 8) | (uint32_t(p[2]) << 16) | (uint32_t(p[3]) << 24);
}

double get_f64(const unsigned char* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

} // namespace

void save_field(const RealField& f, const std::string& path) {
    std::string buf;
    const Grid2D& g = f.grid();
    buf.reserve(24 + 8 * f.size());
    buf.append(kMagic, 8);
    put_u32(buf, uint32_t(g.nx));
    put_u32(buf, uint32_t(g.ny));
    put_f64(buf, g.lx);
    put_f64(buf, g.ly);
    for (double v : f.values()) put_f64(buf, v);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("save_field: cannot open " + path);
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw std::runtime_error("save_field: write failed for " + path);
}

RealField load_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 32 || std::memcmp(buf.data(), kMagic, 8) != 0)
        throw std::runtime_error("load_field: bad magic in " + path);
    const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
    uint32_t nx = get_u32(p + 8);
    uint32_t ny = get_u32(p + 12);
    double lx = get_f64(p + 16);
    double ly = get_f64(p + 24);
    size_t need = 32 + size_t(nx) * ny * 8;
    if (buf.size() != need)
        throw std::runtime_error("load_field: truncated or oversized payload in " + path);
    Grid2D g = make_grid(int(nx), int(ny), lx, ly);
    std::vector<double> vals(size_t(nx) * ny);
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = get_f64(p + 32 + 8 * i);
    return RealField(std::move(g), std::move(vals));
}

} // namespace bozk
