#pragma once

// Periodized Gram matrix [Phi_hat, Phi_hat](xi), the r x (2J+1) matrix
// [Phi_hat(xi + 2 j pi)]_j, its rank profile over [-pi, pi) and the frame
// verdict built on rank constancy and the uniform spectral bound
//   C^{-1} G <= G G^H <= C G,
// which for Hermitian PSD G means every nonzero eigenvalue lies in [1/C, C].

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sisframe/generators.hpp"
#include "sisframe/hermitian.hpp"

namespace sisframe {

inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr int kDefaultGridPoints = 1024;

/// Reduces xi to the fundamental domain [-pi, pi).
double reduce_to_fundamental(double xi);

/// Smallest J such that columns j = -J..J cover every periodization slot in
/// which some generator can be nonzero for xi in [-pi, pi).
int required_periodization_range(const GeneratorSet& gens);

/// Entry (i, j + J) = phi_hat_i(xi + 2 j pi).  Rejects J below
/// required_periodization_range().
CMatrix periodized_matrix(const GeneratorSet& gens, double xi, int J);

/// G_il(xi) = sum_j phi_hat_i(xi + 2 j pi) conj(phi_hat_l(xi + 2 j pi)),
/// exact for compactly supported spectra.  xi must lie in [-pi, pi).
CMatrix gram_matrix(const GeneratorSet& gens, double xi);

/// Eigen-decomposition of G(xi) formed from the periodized matrix in extended
/// precision (see gram_eigen).  Every rank, cutoff and pseudoinverse uses it.
HermitianEigen gram_eigen_at(const GeneratorSet& gens, double xi);

struct RankProfile {
  std::vector<double> xi;
  std::vector<int> rank;
  std::vector<std::vector<double>> singular_values;  // descending, per xi
  std::vector<std::vector<double>> eigenvalues;      // of G(xi), ascending
  double tolerance = kDefaultRankTolerance;
  double sigma_max = 0.0;                            // over the whole grid

  std::map<int, int> histogram() const;
};

/// Ranks on the grid xi_k = -pi + 2 pi k / m.  Singular values are the square
/// roots of the eigenvalues of A A^H = G(xi); sigma counts toward the rank
/// when sigma > tolerance * (largest sigma on the grid).
RankProfile rank_profile(const GeneratorSet& gens, int m = kDefaultGridPoints,
                         double tolerance = kDefaultRankTolerance);

/// Rank at a single frequency with an explicit global sigma_max.
int rank_at(const GeneratorSet& gens, double xi, double sigma_max, double tolerance);

struct FrameVerdict {
  bool constant_rank = false;
  int rank_min = 0;
  int rank_max = 0;
  std::map<int, int> rank_histogram;
  double c_estimate = kInfinity;        // finite only for constant rank
  double min_nonzero_eig = 0.0;
  double max_eig = 0.0;
  double sigma_max = 0.0;
  int m = 0;
  double tolerance = kDefaultRankTolerance;
  /// Rank changes located by bisection to within 1e-6.
  std::vector<double> transitions;

  bool positive() const { return constant_rank && rank_min > 0 && c_estimate < kInfinity; }
};

FrameVerdict frame_verdict(const GeneratorSet& gens, int m = kDefaultGridPoints,
                           double tolerance = kDefaultRankTolerance);

/// Shape of an index set: "gapped" (no two consecutive), "completed" (some
/// consecutive pair k, k+1 also has k+2 in the set), otherwise "none".
std::string index_set_case(std::span<const int> indices);

/// frame_verdict for the bump family with the given indices.
FrameVerdict nonsuccessive_verdict(std::vector<int> indices, const BumpSpec& spec,
                                   int m = kDefaultGridPoints,
                                   double tolerance = kDefaultRankTolerance);

}  // namespace sisframe
