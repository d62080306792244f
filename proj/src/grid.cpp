#include "bozk/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace bozk {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

Grid2D make_grid(int nx, int ny, double lx, double ly) {
    if (nx % 2 != 0 || ny % 2 != 0)
        throw std::invalid_argument("make_grid: odd sample count");
    if (nx < 16 || ny < 16)
        throw std::invalid_argument("make_grid: sample count below 16");
    if (!power_of_two(nx) || !power_of_two(ny))
        throw std::invalid_argument("make_grid: sample counts must be powers of two");
    if (!(lx > 0.0) || !(ly > 0.0))
        throw std::invalid_argument("make_grid: non-positive half-length");

    Grid2D g;
    g.nx = nx; g.ny = ny; g.lx = lx; g.ly = ly;
    g.kx.resize(nx);
    g.ky.resize(ny);
    const double pi = M_PI;
    for (int j = 0; j < nx; ++j) {
        int js = (j < nx / 2) ? j : j - nx;  // signed index, Nyquist at -nx/2
        g.kx[j] = pi * js / lx;
    }
    for (int m = 0; m < ny; ++m) {
        int ms = (m < ny / 2) ? m : m - ny;
        g.ky[m] = pi * ms / ly;
    }
    return g;
}

} // namespace bozk
