#pragma once

#include "bozk/field.hpp"

namespace bozk {

// Unnormalized forward transform; inverse applies the 1/(nx*ny) factor.
// With the physical cell area h, Parseval reads
//   h * sum(u*v) = (h/N) * sum(conj(u_hat)*v_hat).
Spectrum2D fft_forward(const RealField& f);

// Inverse transform keeping only the real part.  If imag_l2 is non-null it
// receives the physical L2 norm of the discarded imaginary part (a measure
// of how far the spectrum was from conjugate symmetric).
RealField fft_inverse(const Spectrum2D& s, double* imag_l2 = nullptr);

// In-place complex transforms used by the time stepper (sign -1 forward,
// +1 inverse without normalization).
void fft_complex(std::vector<std::complex<double>>& data, int ny, int nx, int sign);

// Hint FFTW to use worker threads for subsequent plans (no-op if the
// threaded library is unavailable at build time).
void fft_set_threads(int n);

// Physical spectral pairing (h/N) * Re sum conj(a)*b.
double spectral_pair(const Spectrum2D& a, const Spectrum2D& b);

} // namespace bozk
