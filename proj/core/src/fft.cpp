#include "sisframe/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace sisframe {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using PlanHandle = std::unique_ptr<fftw_plan_s, PlanDeleter>;

struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], BufferDeleter>;

Buffer allocate(std::size_t n) {
  auto* raw = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (raw == nullptr) throw std::bad_alloc();
  return Buffer(raw);
}

}  // namespace

std::vector<cplx> dft(std::span<const cplx> input, FftDirection direction) {
  const std::size_t n = input.size();
  if (n == 0) return {};
  auto in = allocate(n);
  auto out = allocate(n);
  // FFTW_ESTIMATE does not touch the arrays while planning.
  PlanHandle plan(fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(),
                                   direction == FftDirection::Forward ? FFTW_FORWARD
                                                                      : FFTW_BACKWARD,
                                   FFTW_ESTIMATE));
  if (!plan) throw std::runtime_error("fftw: plan creation failed");
  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = input[i].real();
    in[i][1] = input[i].imag();
  }
  fftw_execute(plan.get());
  std::vector<cplx> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = {out[i][0], out[i][1]};
  return result;
}

double torus_frequency(const Grid& grid, long m) {
  return 2.0 * std::numbers::pi * static_cast<double>(m) / grid.length();
}

SampledFunction periodic_inverse_transform(const std::function<cplx(double)>& spectrum,
                                           double lo, double hi, const Grid& grid) {
  if (grid.n == 0 || !(grid.dx > 0.0)) {
    throw std::invalid_argument("periodic_inverse_transform: empty grid");
  }
  const double nyquist = std::numbers::pi / grid.dx;
  if (!(lo > -nyquist && hi < nyquist)) {
    throw std::invalid_argument(
        "periodic_inverse_transform: spectrum support exceeds the Nyquist band; "
        "decrease dx");
  }
  const auto n = static_cast<long>(grid.n);
  const double period = grid.length();
  const double step = 2.0 * std::numbers::pi / period;
  const long m_lo = static_cast<long>(std::ceil(lo / step));
  const long m_hi = static_cast<long>(std::floor(hi / step));
  std::vector<cplx> coeffs(grid.n);
  for (long m = m_lo; m <= m_hi; ++m) {
    const double xi = torus_frequency(grid, m);
    const cplx value = spectrum(xi);
    if (value == cplx{}) continue;
    // e^{i xi_m x0} carries the window offset; the DFT supplies e^{i xi_m n dx}.
    const double phase = std::fmod(static_cast<double>(m) * grid.x0, period) * step;
    const long slot = ((m % n) + n) % n;
    coeffs[slot] += value * std::polar(1.0 / period, phase);
  }
  return SampledFunction(grid, dft(coeffs, FftDirection::Backward), Domain::Time);
}

std::vector<cplx> periodic_spectrum(const SampledFunction& f) {
  const auto n = static_cast<long>(f.size());
  const auto raw = dft(f.values, FftDirection::Forward);
  const double period = f.grid.length();
  const double step = 2.0 * std::numbers::pi / period;
  std::vector<cplx> out(f.size());
  for (long m = -n / 2; m < n - n / 2; ++m) {
    const long slot = ((m % n) + n) % n;
    const double phase = -std::fmod(static_cast<double>(m) * f.grid.x0, period) * step;
    out[static_cast<std::size_t>(m + n / 2)] = raw[slot] * std::polar(f.grid.dx, phase);
  }
  return out;
}

}  // namespace sisframe
