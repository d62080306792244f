#pragma once

#include <vector>

namespace bozk {

// Periodic rectangular domain [-lx,lx) x [-ly,ly) sampled on nx x ny points,
// with the discrete wavenumber tables kx[j] = pi*j'/lx (j' the signed FFT
// index) and likewise ky.  Storage is row-major with x fastest:
// index = iy*nx + ix.
struct Grid2D {
    int nx = 0, ny = 0;
    double lx = 0, ly = 0;
    std::vector<double> kx;  // size nx, FFT (signed) order
    std::vector<double> ky;  // size ny

    double hx() const { return 2.0 * lx / nx; }
    double hy() const { return 2.0 * ly / ny; }
    double cell_area() const { return hx() * hy(); }
    long size() const { return long(nx) * long(ny); }

    double x(int ix) const { return -lx + ix * hx(); }
    double y(int iy) const { return -ly + iy * hy(); }

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
};

// Builds the grid and its wavenumber tables.  nx, ny must be powers of two
// (>= 16) and lx, ly positive.
Grid2D make_grid(int nx, int ny, double lx, double ly);

} // namespace bozk
