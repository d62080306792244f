#include "bozk/operators.hpp"

#include <algorithm>
#include <cmath>

#include "bozk/fft.hpp"

namespace bozk {

using cplx = std::complex<double>;

RealField apply_multiplier_table(const RealField& f, const std::vector<cplx>& table) {
    Spectrum2D s = fft_forward(f);
    for (size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] *= table[i];
    return fft_inverse(s);
}

RealField apply_multiplier(const RealField& f, const Symbol& sym) {
    const Grid2D& g = f.grid();
    Spectrum2D s = fft_forward(f);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            s.at(ix, iy) *= sym(g.kx[ix], g.ky[iy]);
    double imag_l2 = 0.0;
    RealField out = fft_inverse(s, &imag_l2);
    double fnorm = lp_norm(f, 2.0);
    if (imag_l2 > 1e-10 * std::max(fnorm, 1e-300))
        throw std::invalid_argument("apply_multiplier: non-Hermitian symbol (imaginary residue "
                                    + std::to_string(imag_l2) + ")");
    return out;
}

namespace {

// Odd multipliers are zeroed at the Nyquist frequency so outputs stay real
// and the discrete operators stay skew symmetric.
std::vector<cplx> hilbert_table(const Grid2D& g) {
    std::vector<cplx> t(g.size());
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double v = 0.0;
            if (ix != g.nx / 2 && g.kx[ix] != 0.0) v = g.kx[ix] > 0 ? -1.0 : 1.0;
            t[size_t(iy) * g.nx + ix] = cplx(0.0, v);
        }
    return t;
}

std::vector<cplx> deriv_x_table(const Grid2D& g) {
    std::vector<cplx> t(g.size());
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double k = (ix == g.nx / 2) ? 0.0 : g.kx[ix];
            t[size_t(iy) * g.nx + ix] = cplx(0.0, k);
        }
    return t;
}

} // namespace

RealField hilbert_x(const RealField& f) {
    if (!f.all_finite()) throw std::invalid_argument("hilbert_x: non-finite input");
    return apply_multiplier_table(f, hilbert_table(f.grid()));
}

RealField deriv_x(const RealField& f) {
    return apply_multiplier_table(f, deriv_x_table(f.grid()));
}

RealField frac_dx(const RealField& f, double s) {
    if (s < 0.0) throw std::invalid_argument("frac_dx: negative order");
    const Grid2D& g = f.grid();
    std::vector<cplx> t(g.size());
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double a = std::abs(g.kx[ix]);
            // |0|^0 = 1 so s = 0 is the identity
            t[size_t(iy) * g.nx + ix] = (s == 0.0) ? 1.0 : std::pow(a, s);
        }
    return apply_multiplier_table(f, t);
}

RealField dy(const RealField& f, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("dy: order must be 1 or 2");
    const Grid2D& g = f.grid();
    std::vector<cplx> t(g.size());
    for (int iy = 0; iy < g.ny; ++iy) {
        double k = (iy == g.ny / 2) ? 0.0 : g.ky[iy];
        cplx m = (order == 1) ? cplx(0.0, k) : cplx(-k * k, 0.0);
        for (int ix = 0; ix < g.nx; ++ix) t[size_t(iy) * g.nx + ix] = m;
    }
    return apply_multiplier_table(f, t);
}

double inner(const RealField& f, const RealField& g) {
    f.check_same_grid(g);
    double acc = 0.0;
    const auto& a = f.values();
    const auto& b = g.values();
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc * f.grid().cell_area();
}

double lp_norm(const RealField& f, double q) {
    if (q < 1.0) throw std::invalid_argument("lp_norm: q < 1");
    double acc = 0.0;
    for (double v : f.values()) acc += std::pow(std::abs(v), q);
    return std::pow(acc * f.grid().cell_area(), 1.0 / q);
}

double rational_power(double u, long num, long den) {
    if (den == 1) {
        double r = 1.0, b = u;
        long e = num;
        while (e > 0) {  // exact small-integer power
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    double mag = std::pow(std::abs(u), double(num) / double(den));
    return (num % 2 != 0 && u < 0) ? -mag : mag;
}

RealField rational_power(const RealField& f, long num, long den) {
    RealField out(f.grid());
    const auto& v = f.values();
    for (size_t i = 0; i < v.size(); ++i) out[i] = rational_power(v[i], num, den);
    return out;
}

RealField power_nonlinearity(const RealField& f, const Exponent& p) {
    return rational_power(f, p.num_p1(), p.den());
}

int dealias_pad(const Exponent& p) {
    if (!p.is_integer()) return 2;
    return int(std::ceil((p.value() + 2.0) / 2.0));
}

RealField dealiased_power(const RealField& u, long num, long den, int pad_x, int pad_y) {
    const Grid2D& g = u.grid();
    const int nx = g.nx, ny = g.ny;
    const int Mx = nx * std::max(pad_x, 1), My = ny * std::max(pad_y, 1);
    if (Mx == nx && My == ny)
        return rational_power(u, num, den);

    Spectrum2D s = fft_forward(u);

    // embed into the padded layout, splitting Nyquist rows/columns
    std::vector<cplx> big(size_t(Mx) * My, cplx(0.0, 0.0));
    const double up = double(Mx) * My / double(nx * ny);
    auto dst_index = [&](int js, int ms) { return size_t(ms < 0 ? ms + My : ms) * Mx + (js < 0 ? js + Mx : js); };
    for (int m = 0; m < ny; ++m) {
        int ms = (m < ny / 2) ? m : m - ny;
        double wy = 1.0;
        bool ny_nyq = (ms == -ny / 2) && (My > ny);
        if (ny_nyq) wy = 0.5;
        for (int j = 0; j < nx; ++j) {
            int js = (j < nx / 2) ? j : j - nx;
            double w = wy;
            bool nx_nyq = (js == -nx / 2) && (Mx > nx);
            if (nx_nyq) w *= 0.5;
            cplx c = s.at(j, m) * up * w;
            // Nyquist coefficients of a real field are real; the split copies
            // are their own conjugates.
            for (int sx = 0; sx < (nx_nyq ? 2 : 1); ++sx) {
                int jd = nx_nyq ? (sx == 0 ? js : -js) : js;
                for (int sy = 0; sy < (ny_nyq ? 2 : 1); ++sy) {
                    int md = ny_nyq ? (sy == 0 ? ms : -ms) : ms;
                    big[dst_index(jd, md)] += c;
                }
            }
        }
    }

    fft_complex(big, My, Mx, +1);
    const double inv = 1.0 / (double(Mx) * My);
    for (auto& z : big) z = rational_power(z.real() * inv, num, den);
    fft_complex(big, My, Mx, -1);

    // project back, recombining split Nyquist slots
    Spectrum2D out;
    out.grid = g;
    out.coeffs.assign(size_t(nx) * ny, cplx(0.0, 0.0));
    const double down = 1.0 / up;
    for (int m = 0; m < ny; ++m) {
        int ms = (m < ny / 2) ? m : m - ny;
        bool ny_nyq = (ms == -ny / 2) && (My > ny);
        for (int j = 0; j < nx; ++j) {
            int js = (j < nx / 2) ? j : j - nx;
            bool nx_nyq = (js == -nx / 2) && (Mx > nx);
            cplx acc(0.0, 0.0);
            for (int sx = 0; sx < (nx_nyq ? 2 : 1); ++sx) {
                int jd = nx_nyq ? (sx == 0 ? js : -js) : js;
                for (int sy = 0; sy < (ny_nyq ? 2 : 1); ++sy) {
                    int md = ny_nyq ? (sy == 0 ? ms : -ms) : ms;
                    acc += big[dst_index(jd, md)];
                }
            }
            out.at(j, m) = acc * down;
        }
    }
    return fft_inverse(out);
}

RealField resample_scaled(const RealField& f, const std::vector<double>& xs,
                          const std::vector<double>& ys) {
    const Grid2D& g = f.grid();
    const int nx = g.nx, ny = g.ny;
    Spectrum2D s = fft_forward(f);

    // Stage 1: for every spectral row m, evaluate the x-series at the target
    // points (split x-Nyquist into +/- halves so the interpolant is real).
    std::vector<cplx> mid(size_t(ny) * xs.size(), cplx(0, 0));
    for (int m = 0; m < ny; ++m) {
        for (size_t i = 0; i < xs.size(); ++i) {
            cplx acc(0, 0);
            double sx = xs[i] + g.lx;  // FFT phase origin at the box corner
            for (int j = 0; j < nx; ++j) {
                int js = (j < nx / 2) ? j : j - nx;
                double k = M_PI * js / g.lx;
                cplx c = s.at(j, m);
                if (js == -nx / 2) {
                    acc += c * std::cos(k * sx);  // cosine-only Nyquist
                } else {
                    acc += c * std::exp(cplx(0, k * sx));
                }
            }
            mid[size_t(m) * xs.size() + i] = acc;
        }
    }
    // Stage 2: same along y.
    RealField out(g);
    for (size_t q = 0; q < ys.size(); ++q) {
        double sy = ys[q] + g.ly;
        std::vector<cplx> wy(ny);
        for (int m = 0; m < ny; ++m) {
            int ms = (m < ny / 2) ? m : m - ny;
            double k = M_PI * ms / g.ly;
            wy[m] = (ms == -ny / 2) ? cplx(std::cos(k * sy), 0.0) : std::exp(cplx(0, k * sy));
        }
        for (size_t i = 0; i < xs.size(); ++i) {
            cplx acc(0, 0);
            for (int m = 0; m < ny; ++m) acc += mid[size_t(m) * xs.size() + i] * wy[m];
            out[q * xs.size() + i] = acc.real() / double(g.size());
        }
    }
    return out;
}

} // namespace bozk
