#pragma once

// Dual generators, analysis/synthesis on the periodic time window, the
// biorthogonality matrix and empirical p-frame constants.
//
// The dual is Psi_hat(xi + 2 j pi) = G(xi)^+ Phi_hat(xi + 2 j pi), with the
// pseudoinverse inverting exactly the eigenvalues that the rank verdict
// counts (lambda > (tol * sigma_max)^2).  All pairings are sesquilinear:
// <f, g> = int f conj(g).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sisframe/gram.hpp"
#include "sisframe/signal.hpp"

namespace sisframe {

class NotAFrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DualOptions {
  double tolerance = kDefaultRankTolerance;
  int m = kDefaultGridPoints;
  /// The dual of a non-constant-rank family is not a W^1 family; refuse by
  /// default.  Disabling the gate still builds the pseudoinverse dual.
  bool require_constant_rank = true;
};

struct DualSet {
  FrameVerdict verdict;
  double eigen_cutoff = 0.0;
  std::vector<FourierGenerator> fourier;   // psi_hat_i, evaluable anywhere
  std::vector<SampledFunction> time;       // on the generators' time grid
  std::vector<double> amalgam_norms;       // W^1_omega, omega = (1+|x|)^4
};

/// Requires gens.has_time_data().  Throws NotAFrameError for a negative
/// verdict unless options.require_constant_rank is false.
DualSet build_dual(const GeneratorSet& gens, const DualOptions& options = {});

/// Cached analysis operator f -> {<f, g_i(. - j)>}_{i, j} on a periodic grid
/// (FFT cross-correlation).
class AnalysisOperator {
 public:
  explicit AnalysisOperator(const std::vector<SampledFunction>& functions);

  std::size_t rows() const { return spectra_.size(); }
  const Grid& grid() const { return grid_; }

  /// Translates j_min..j_max; at most one period (L translates) wide.
  CoefficientArray apply(const SampledFunction& f, int j_min, int j_max) const;

  /// Every distinct translate of the period: j = -L/2 .. L/2 - 1.
  CoefficientArray apply(const SampledFunction& f) const;

 private:
  Grid grid_;
  std::vector<std::vector<cplx>> spectra_;  // conj(DFT(g_i))
};

/// One-shot analysis; Periodic uses the FFT path, Truncate direct sums.
CoefficientArray analyze(const SampledFunction& f, const std::vector<SampledFunction>& functions,
                         int j_min, int j_max, Boundary boundary = Boundary::Periodic);

/// S c = sum_i sum_j c^i_j g_i(. - j).
SampledFunction synthesize(const std::vector<SampledFunction>& functions,
                           const CoefficientArray& c, Boundary boundary = Boundary::Periodic);

/// B_ik = int phi_i conj(psi_k).
CMatrix biorthogonality_matrix(const GeneratorSet& gens, const DualSet& duals);

/// max_ik |B_ik - delta_ik|.
double max_identity_deviation(const CMatrix& b);

/// Random coefficients c^i_j, j in [-support, support]: complex Gaussian
/// entries damped by 1 / (mu(j) (1 + |j|)^2).
CoefficientArray random_coefficients(std::size_t rows, int support, const Weight& mu,
                                     std::uint64_t seed);

struct ReconstructionReport {
  int trials = 0;
  double max_error = 0.0;            // ||f - S_Phi A_Psi f|| / ||f||, L^2
  double max_error_symmetric = 0.0;  // ||f - S_Psi A_Phi f|| / ||f||
};

ReconstructionReport reconstruction_test(const GeneratorSet& gens, const DualSet& duals,
                                         int n_trials, std::uint64_t seed, int support = 8);

struct PFrameOptions {
  int support = 8;
  /// Also report the dual-coefficient ratio ||A_Psi f|| / ||f||.
  const DualSet* duals = nullptr;
  /// Add one trial concentrated on the fiber with the smallest nonzero Gram
  /// eigenvalue (eigenvector modulated over every translate).
  bool adversarial = false;
  double tolerance = kDefaultRankTolerance;
};

struct FrameConstants {
  double p = 2.0;
  Weight mu;
  int n_trials = 0;
  std::uint64_t seed = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> ratios;        // per random trial, in seed order
  std::optional<double> dual_lower;  // ||A_Psi f|| / ||f||, if duals given
  std::optional<double> dual_upper;
  std::optional<double> adversarial_ratio;
  std::optional<double> adversarial_frequency;
};

/// R(f) = sum_i ||{<f, phi_i(. - j)>}_j||_{l^p_mu} / ||f||_{L^p_mu} over
/// f = S_Phi c for seeded random c.  lower/upper bracket every trial.
FrameConstants pframe_constants(const GeneratorSet& gens, double p, const Weight& mu,
                                int n_trials, std::uint64_t seed,
                                const PFrameOptions& options = {});

/// The ratio above for one function.
double pframe_ratio(const AnalysisOperator& analysis, const SampledFunction& f, double p,
                    const Weight& mu);

struct CrossPReport {
  std::vector<FrameConstants> blocks;  // p = 1, 2, inf
  bool all_positive = false;
};

/// pframe_constants for p in {1, 2, inf}; requires a positive verdict.
CrossPReport cross_p_consistency(const GeneratorSet& gens, const Weight& mu, int n_trials,
                                 std::uint64_t seed, const PFrameOptions& options = {});

}  // namespace sisframe
