#pragma once

// Thin FFTW wrapper plus the periodic (torus) synthesis used for every
// time-domain generator and dual.
//
// Fourier convention: F(h)(xi) = int e^{-i xi t} h(t) dt,
// F^{-1}(g)(x) = (1/2pi) int e^{i xi x} g(xi) dxi.  Integer translation is
// multiplication by e^{-i j xi}; all Gram objects are 2pi-periodic.

#include <functional>
#include <span>
#include <vector>

#include "sisframe/signal.hpp"

namespace sisframe {

enum class FftDirection { Forward, Backward };

/// Unnormalized DFT: Forward uses e^{-2 pi i k n / N}, Backward e^{+...}.
std::vector<cplx> dft(std::span<const cplx> input, FftDirection direction);

/// Frequencies xi_m = 2 pi m / L (L = grid length) resolved by a periodic
/// time grid, for m in [-N/2, N/2).
double torus_frequency(const Grid& grid, long m);

/// L-periodization of F^{-1}(spectrum) sampled on `grid`, i.e.
/// sum_l h(x + l L) = (1/L) sum_m spectrum(xi_m) e^{i xi_m x} (Poisson).
/// `spectrum` must vanish outside [lo, hi], which has to fit strictly inside
/// the Nyquist band (-pi/dx, pi/dx).
SampledFunction periodic_inverse_transform(const std::function<cplx(double)>& spectrum,
                                           double lo, double hi, const Grid& grid);

/// Samples of the spectrum of an L-periodic function at xi_m, m in [-N/2, N/2),
/// ordered by m: the inverse of periodic_inverse_transform on band-limited data.
std::vector<cplx> periodic_spectrum(const SampledFunction& f);

}  // namespace sisframe
