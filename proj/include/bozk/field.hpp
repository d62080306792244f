#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bozk/grid.hpp"

namespace bozk {

// Real-valued sample of a function on a Grid2D.  Values are immutable in
// spirit: operations return new fields; in-place mutators exist for the few
// hot loops that need them.
class RealField {
public:
    RealField() = default;
    explicit RealField(Grid2D grid) : grid_(std::move(grid)), v_(grid_.size(), 0.0) {}
    RealField(Grid2D grid, std::vector<double> values)
        : grid_(std::move(grid)), v_(std::move(values)) {
        if (long(v_.size()) != grid_.size())
            throw std::invalid_argument("RealField: value count does not match grid");
    }

    static RealField sample(const Grid2D& g, const std::function<double(double, double)>& f) {
        RealField out(g);
        for (int iy = 0; iy < g.ny; ++iy) {
            double y = g.y(iy);
            for (int ix = 0; ix < g.nx; ++ix)
                out.v_[size_t(iy) * g.nx + ix] = f(g.x(ix), y);
        }
        return out;
    }

    const Grid2D& grid() const { return grid_; }
    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    double at(int ix, int iy) const { return v_[size_t(iy) * grid_.nx + ix]; }
    double& at(int ix, int iy) { return v_[size_t(iy) * grid_.nx + ix]; }
    double operator[](size_t i) const { return v_[i]; }
    double& operator[](size_t i) { return v_[i]; }
    size_t size() const { return v_.size(); }

    bool all_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    RealField& operator*=(double c) {
        for (double& x : v_) x *= c;
        return *this;
    }
    RealField& operator+=(const RealField& o) {
        check_same_grid(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    RealField& operator-=(const RealField& o) {
        check_same_grid(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }

    friend RealField operator*(double c, RealField f) { f *= c; return f; }
    friend RealField operator+(RealField a, const RealField& b) { a += b; return a; }
    friend RealField operator-(RealField a, const RealField& b) { a -= b; return a; }

    void check_same_grid(const RealField& o) const {
        if (!(grid_ == o.grid_))
            throw std::invalid_argument("RealField: grid mismatch");
    }

private:
    Grid2D grid_;
    std::vector<double> v_;
};

// Full complex Fourier coefficient array of a real field (conjugate
// symmetric), FFT layout matching the grid's wavenumber tables.
struct Spectrum2D {
    Grid2D grid;
    std::vector<std::complex<double>> coeffs;  // size nx*ny, row-major, x fastest

    std::complex<double> at(int jx, int jy) const {
        return coeffs[size_t(jy) * grid.nx + jx];
    }
    std::complex<double>& at(int jx, int jy) {
        return coeffs[size_t(jy) * grid.nx + jx];
    }
};

} // namespace bozk
