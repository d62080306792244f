#pragma once

#include <complex>
#include <functional>

#include "bozk/exponent.hpp"
#include "bozk/field.hpp"

namespace bozk {

using Symbol = std::function<std::complex<double>(double kx, double ky)>;

// Generic Fourier-multiplier application f -> ifft(sym * fft(f)).  The symbol
// must satisfy sym(-k) = conj(sym(k)); a violation shows up as an imaginary
// residue in the output and is rejected above 1e-10 of the field norm.
RealField apply_multiplier(const RealField& f, const Symbol& sym);

// Fast path for internally built multiplier tables (size nx*ny, FFT layout).
// Tables built by the named operators are exactly conjugate symmetric.
RealField apply_multiplier_table(const RealField& f, const std::vector<std::complex<double>>& table);

// Hilbert transform in x: symbol -i*sgn(kx), sgn(0) = 0, x-Nyquist zeroed.
RealField hilbert_x(const RealField& f);

// Fractional x-derivative |kx|^s, s >= 0 (s = 0 acts as the identity).
RealField frac_dx(const RealField& f, double s);

// d/dx with the x-Nyquist mode zeroed (odd multiplier convention).
RealField deriv_x(const RealField& f);

// y-derivative of order 1 or 2; order 2 is the exact square of the order-1
// multiplier so dy(f,2) matches dy(dy(f,1),1) mode by mode.
RealField dy(const RealField& f, int order);

// L2 pairing with the physical cell area: h * sum(f*g).
double inner(const RealField& f, const RealField& g);

// (h * sum |f|^q)^(1/q), q >= 1.
double lp_norm(const RealField& f, double q);

// Pointwise signed rational power sgn(u)^num * |u|^(num/den), den odd.
// Integer exponents (den = 1) are evaluated by repeated multiplication.
double rational_power(double u, long num, long den);
RealField rational_power(const RealField& f, long num, long den);

// The equation nonlinearity u^{p+1}.
RealField power_nonlinearity(const RealField& f, const Exponent& p);

// Default zero-padding factor for dealiasing u^{p+1}: ceil((p+2)/2) for
// integer p, 2 otherwise (rational powers are not band limited; padding
// suppresses the dominant aliases).
int dealias_pad(const Exponent& p);

// u^{num/den} evaluated on a grid zero-padded by (pad_x, pad_y) and projected
// back: the Galerkin product used by the solver and the time stepper.
RealField dealiased_power(const RealField& u, long num, long den, int pad_x, int pad_y);

// Spectral (trigonometric) evaluation of f at arbitrary points of its
// periodic extension, separable in x and y: out(i,m) = f(xs[i], ys[m]).
RealField resample_scaled(const RealField& f, const std::vector<double>& xs,
                          const std::vector<double>& ys);

} // namespace bozk
