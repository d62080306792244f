#include "bozk/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace bozk {

namespace {

// FFTW planning is not thread safe; executing a cached plan on fresh arrays
// is.  Plans are created UNALIGNED so the new-array execute interface works
// on any std::complex buffer.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
    static std::map<std::pair<int, int>, PlanPair> cache;
    return cache;
}

PlanPair get_plans(int ny, int nx) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find({ny, nx});
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> buf(size_t(nx) * ny);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft_2d(ny, nx, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_2d(ny, nx, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[{ny, nx}] = pp;
    return pp;
}

} // namespace

void fft_set_threads(int n) {
#ifdef BOZK_FFTW_THREADS
    static std::once_flag once;
    std::call_once(once, [] { fftw_init_threads(); });
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_plan_with_nthreads(n > 0 ? n : 1);
#else
    (void)n;
#endif
}

void fft_complex(std::vector<std::complex<double>>& data, int ny, int nx, int sign) {
    PlanPair pp = get_plans(ny, nx);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(sign < 0 ? pp.fwd : pp.bwd, p, p);
}

Spectrum2D fft_forward(const RealField& f) {
    const Grid2D& g = f.grid();
    Spectrum2D s;
    s.grid = g;
    s.coeffs.assign(f.values().begin(), f.values().end());
    fft_complex(s.coeffs, g.ny, g.nx, -1);
    return s;
}

RealField fft_inverse(const Spectrum2D& s, double* imag_l2) {
    const Grid2D& g = s.grid;
    std::vector<std::complex<double>> buf = s.coeffs;
    fft_complex(buf, g.ny, g.nx, +1);
    const double scale = 1.0 / double(g.size());
    RealField out(g);
    double imag_sq = 0.0;
    for (size_t i = 0; i < buf.size(); ++i) {
        out[i] = buf[i].real() * scale;
        double im = buf[i].imag() * scale;
        imag_sq += im * im;
    }
    if (imag_l2) *imag_l2 = std::sqrt(g.cell_area() * imag_sq);
    return out;
}

double spectral_pair(const Spectrum2D& a, const Spectrum2D& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        acc += a.coeffs[i].real() * b.coeffs[i].real() + a.coeffs[i].imag() * b.coeffs[i].imag();
    return acc * a.grid.cell_area() / double(a.grid.size());
}

} // namespace bozk
