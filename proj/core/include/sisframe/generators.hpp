#pragma once

// Generator families for shift-invariant spaces.
//
// The built-in family is the modulated bump: theta is smooth, equal to 1 on
// [-pi+eps, pi-eps] and vanishes outside (-pi, pi); generator k has Fourier
// transform theta(xi + sign*k*pi).  Arbitrary generators given by their
// Fourier transform (closed form or sampled CSV data) share the same
// GeneratorSet type so the Gram and dual machinery apply to both.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sisframe/signal.hpp"
#include "sisframe/weights.hpp"

namespace sisframe {

enum class BumpProfile { Exp, Poly };

BumpProfile parse_profile(const std::string& text);
std::string to_string(BumpProfile profile);

struct BumpSpec {
  double epsilon = 0.2;
  bool normalized = false;
  BumpProfile profile = BumpProfile::Exp;
  /// +1: phi_hat_k = theta(xi + k pi); -1: theta(xi - k pi).
  int sign = +1;
};

/// Validated bump theta.
class Bump {
 public:
  explicit Bump(BumpSpec spec);

  const BumpSpec& spec() const { return spec_; }

  /// theta(xi), never normalized.
  double operator()(double xi) const;

  /// sum_k theta(xi + k pi); at most three nonzero terms, always >= 1.
  double partition_sum(double xi) const;

  /// Fourier transform of generator k: theta(xi + sign k pi), divided by the
  /// partition sum when the spec is normalized.
  double generator(int k, double xi) const;

  /// Smooth step on [0,1] used on the transition bands.
  double step(double t) const;

 private:
  BumpSpec spec_;
};

/// One generator described in the frequency domain.
struct FourierGenerator {
  std::string label;
  std::function<cplx(double)> transform;
  /// transform vanishes outside [support_lo, support_hi].
  double support_lo = 0.0;
  double support_hi = 0.0;
};

/// Linear interpolation of sampled frequency data (zero outside its range).
FourierGenerator sampled_generator(std::string label, const SampledFunction& data);

struct BuildOptions {
  /// Step of the stored frequency samples; 0 selects eps/16.
  double freq_step = 0.0;
  /// Exponent of the polynomial weight used for the amalgam membership check.
  double decay_exponent = 4.0;
};

/// Quantities recorded while building time-domain generators.
struct GeneratorDiagnostics {
  double amalgam_norm = 0.0;     // W^1_omega with omega = (1+|x|)^decay_exponent
  double decay_constant = 0.0;   // max |phi(x)| (1+|x|)^decay_exponent
  double edge_magnitude = 0.0;   // max |phi| on the outermost unit cells
  double peak_magnitude = 0.0;   // max |phi|
};

class GeneratorSet {
 public:
  GeneratorSet() = default;

  /// Bump family for strictly increasing indices (Fourier data only).
  static GeneratorSet bump_family(std::vector<int> indices, const BumpSpec& spec);

  /// Arbitrary generators (Fourier data only).
  static GeneratorSet from_fourier(std::vector<FourierGenerator> generators);

  std::size_t size() const { return generators_.size(); }
  const FourierGenerator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<FourierGenerator>& generators() const { return generators_; }

  const std::vector<int>& indices() const { return indices_; }
  const std::optional<BumpSpec>& bump() const { return bump_; }

  cplx transform(std::size_t i, double xi) const { return generators_[i].transform(xi); }

  bool has_time_data() const { return !time_.empty(); }
  const Grid& time_grid() const { return time_grid_; }
  const std::vector<SampledFunction>& time() const { return time_; }
  const std::vector<SampledFunction>& fourier() const { return fourier_; }
  const std::vector<GeneratorDiagnostics>& diagnostics() const { return diagnostics_; }

  /// Samples every generator on `time_grid` (periodized over the window) and
  /// on a fine frequency grid; records decay diagnostics.
  void synthesize(const Grid& time_grid, const BuildOptions& options = {});

 private:
  std::vector<FourierGenerator> generators_;
  std::vector<int> indices_;
  std::optional<BumpSpec> bump_;
  Grid time_grid_;
  std::vector<SampledFunction> time_;
  std::vector<SampledFunction> fourier_;
  std::vector<GeneratorDiagnostics> diagnostics_;
};

/// Bump family with time-domain samples on `time_grid`.
///
/// The window [x0, x0 + L) is treated as one period: samples are the exact
/// L-periodization of F^{-1}(theta(. + k pi)).  Rejects non-increasing
/// indices, a time grid without integer samples per unit, and a frequency
/// step coarser than eps/8.
GeneratorSet build_generators(std::vector<int> indices, const BumpSpec& spec,
                              const Grid& time_grid, const BuildOptions& options = {});

}  // namespace sisframe
