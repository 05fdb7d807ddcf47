#include "sisframe/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace sisframe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTransitionResolution = 1e-6;

std::vector<double> singular_values_of(const HermitianEigen& eig) {
  std::vector<double> sv;
  sv.reserve(eig.values.size());
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it) {
    sv.push_back(std::sqrt(std::max(*it, 0.0)));
  }
  return sv;
}

int count_above(const std::vector<double>& sv, double threshold) {
  return static_cast<int>(std::count_if(sv.begin(), sv.end(),
                                        [&](double s) { return s > threshold; }));
}

void validate_profile_args(int m, double tolerance) {
  if (m < 64) throw std::invalid_argument("rank profile needs m >= 64 grid points");
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("rank tolerance must lie in (0, 1)");
  }
}

}  // namespace

double reduce_to_fundamental(double xi) {
  double r = xi - kTwoPi * std::floor((xi + kPi) / kTwoPi);
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

int required_periodization_range(const GeneratorSet& gens) {
  int J = 0;
  for (const auto& g : gens.generators()) {
    const auto j_lo = static_cast<int>(std::ceil((g.support_lo - kPi) / kTwoPi - 1e-12));
    const auto j_hi = static_cast<int>(std::floor((g.support_hi + kPi) / kTwoPi + 1e-12));
    J = std::max({J, std::abs(j_lo), std::abs(j_hi)});
  }
  return J;
}

CMatrix periodized_matrix(const GeneratorSet& gens, double xi, int J) {
  if (J < required_periodization_range(gens)) {
    throw std::invalid_argument("periodization range J=" + std::to_string(J) +
                                " does not cover the generator supports (need " +
                                std::to_string(required_periodization_range(gens)) + ")");
  }
  CMatrix a(gens.size(), static_cast<std::size_t>(2 * J + 1));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int j = -J; j <= J; ++j) {
      a(i, static_cast<std::size_t>(j + J)) = gens.transform(i, xi + kTwoPi * j);
    }
  }
  return a;
}

CMatrix gram_matrix(const GeneratorSet& gens, double xi) {
  if (!(xi >= -kPi && xi < kPi)) {
    throw std::invalid_argument("gram_matrix: xi must lie in [-pi, pi); reduce it first");
  }
  return periodized_matrix(gens, xi, required_periodization_range(gens)).gram();
}

HermitianEigen gram_eigen_at(const GeneratorSet& gens, double xi) {
  if (!(xi >= -kPi && xi < kPi)) {
    throw std::invalid_argument("gram_eigen_at: xi must lie in [-pi, pi); reduce it first");
  }
  return gram_eigen(periodized_matrix(gens, xi, required_periodization_range(gens)));
}

std::map<int, int> RankProfile::histogram() const {
  std::map<int, int> h;
  for (int r : rank) ++h[r];
  return h;
}

RankProfile rank_profile(const GeneratorSet& gens, int m, double tolerance) {
  validate_profile_args(m, tolerance);
  RankProfile profile;
  profile.tolerance = tolerance;
  profile.xi.resize(m);
  profile.singular_values.resize(m);
  profile.eigenvalues.resize(m);
  for (int k = 0; k < m; ++k) {
    const double xi = -kPi + kTwoPi * k / m;
    const auto eig = gram_eigen_at(gens, xi);
    profile.xi[k] = xi;
    profile.singular_values[k] = singular_values_of(eig);
    profile.eigenvalues[k] = eig.values;
    if (!profile.singular_values[k].empty()) {
      profile.sigma_max = std::max(profile.sigma_max, profile.singular_values[k].front());
    }
  }
  const double threshold = tolerance * profile.sigma_max;
  profile.rank.resize(m);
  for (int k = 0; k < m; ++k) profile.rank[k] = count_above(profile.singular_values[k], threshold);
  return profile;
}

int rank_at(const GeneratorSet& gens, double xi, double sigma_max, double tolerance) {
  const auto eig = gram_eigen_at(gens, reduce_to_fundamental(xi));
  return count_above(singular_values_of(eig), tolerance * sigma_max);
}

FrameVerdict frame_verdict(const GeneratorSet& gens, int m, double tolerance) {
  const auto profile = rank_profile(gens, m, tolerance);
  FrameVerdict v;
  v.m = m;
  v.tolerance = tolerance;
  v.sigma_max = profile.sigma_max;
  v.rank_histogram = profile.histogram();
  v.rank_min = v.rank_histogram.begin()->first;
  v.rank_max = v.rank_histogram.rbegin()->first;
  v.constant_rank = v.rank_histogram.size() == 1;

  const double eig_cutoff = std::pow(tolerance * profile.sigma_max, 2);
  v.min_nonzero_eig = kInfinity;
  for (const auto& eigs : profile.eigenvalues) {
    for (double lambda : eigs) {
      v.max_eig = std::max(v.max_eig, lambda);
      if (lambda > eig_cutoff) v.min_nonzero_eig = std::min(v.min_nonzero_eig, lambda);
    }
  }
  if (!std::isfinite(v.min_nonzero_eig)) v.min_nonzero_eig = 0.0;

  if (v.constant_rank && v.rank_min > 0 && v.min_nonzero_eig > 0.0) {
    v.c_estimate = std::max(v.max_eig, 1.0 / v.min_nonzero_eig);
  }

  // Locate every rank change between neighbouring grid points (including the
  // wrap from the last point back to -pi + 2 pi).
  for (int k = 0; k < m; ++k) {
    const int next = (k + 1) % m;
    if (profile.rank[k] == profile.rank[next]) continue;
    double lo = profile.xi[k];
    double hi = next == 0 ? kPi : profile.xi[next];
    const int rank_lo = profile.rank[k];
    while (hi - lo > kTransitionResolution) {
      const double mid = 0.5 * (lo + hi);
      if (rank_at(gens, mid, profile.sigma_max, tolerance) == rank_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    v.transitions.push_back(reduce_to_fundamental(0.5 * (lo + hi)));
  }
  std::sort(v.transitions.begin(), v.transitions.end());
  return v;
}

std::string index_set_case(std::span<const int> indices) {
  bool any_unit_gap = false;
  bool completed = false;
  const std::set<int> members(indices.begin(), indices.end());
  for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
    if (indices[i + 1] - indices[i] != 1) continue;
    any_unit_gap = true;
    if (members.count(indices[i] + 2) > 0) completed = true;
  }
  if (!any_unit_gap) return "gapped";
  return completed ? "completed" : "none";
}

FrameVerdict nonsuccessive_verdict(std::vector<int> indices, const BumpSpec& spec, int m,
                                   double tolerance) {
  return frame_verdict(GeneratorSet::bump_family(std::move(indices), spec), m, tolerance);
}

}  // namespace sisframe
