#include "sisframe/dual.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <random>

#include "sisframe/fft.hpp"

namespace sisframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long period_length(const Grid& grid) {
  if (grid.samples_per_unit() <= 0) {
    throw std::invalid_argument("time grid must have an integer number of samples per unit");
  }
  const double L = grid.length();
  if (std::abs(L - std::round(L)) > 1e-9) {
    throw std::invalid_argument("time window length must be an integer");
  }
  return std::lround(L);
}

// Residue of the torus index m modulo L, mapped to [-L/2, L/2).
long fiber_of(long m, long L) {
  const long half = L / 2;
  long r = (m + half) % L;
  if (r < 0) r += L;
  return r - half;
}

double eigen_cutoff(double sigma_max, double tolerance) {
  return std::pow(tolerance * sigma_max, 2);
}

CMatrix pseudo_inverse_at(const GeneratorSet& gens, double xi, double cutoff) {
  return hermitian_pseudo_inverse(gram_eigen_at(gens, xi), cutoff);
}

CoefficientArray draw_coefficients(std::size_t rows, int support, const Weight& mu,
                                   std::mt19937_64& rng) {
  if (support < 0) throw std::invalid_argument("coefficient support must be >= 0");
  std::normal_distribution<double> normal(0.0, 1.0);
  CoefficientArray c(static_cast<int>(rows), -support, support);
  for (int i = 0; i < static_cast<int>(rows); ++i) {
    for (int j = -support; j <= support; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      const double damp = 1.0 / (mu(j) * std::pow(1.0 + std::abs(j), 2));
      c.at(i, j) = cplx{re, im} * (damp / std::numbers::sqrt2);
    }
  }
  return c;
}

double relative_error(const SampledFunction& f, const SampledFunction& g) {
  SampledFunction diff(f.grid, f.domain);
  for (std::size_t n = 0; n < f.size(); ++n) diff.values[n] = f.values[n] - g.values[n];
  const Weight one = Weight::constant();
  return function_norm(diff, 2.0, one) / function_norm(f, 2.0, one);
}

}  // namespace

DualSet build_dual(const GeneratorSet& gens, const DualOptions& options) {
  if (!gens.has_time_data()) {
    throw std::invalid_argument("build_dual needs generators with time-domain samples");
  }
  DualSet dual;
  dual.verdict = frame_verdict(gens, options.m, options.tolerance);
  if (options.require_constant_rank && !dual.verdict.positive()) {
    throw NotAFrameError("generators do not form a frame: Gram rank ranges over [" +
                         std::to_string(dual.verdict.rank_min) + ", " +
                         std::to_string(dual.verdict.rank_max) + "]");
  }
  dual.eigen_cutoff = eigen_cutoff(dual.verdict.sigma_max, options.tolerance);

  double lo = gens.generator(0).support_lo;
  double hi = gens.generator(0).support_hi;
  for (const auto& g : gens.generators()) {
    lo = std::min(lo, g.support_lo);
    hi = std::max(hi, g.support_hi);
  }

  auto base = std::make_shared<const GeneratorSet>(GeneratorSet::from_fourier(gens.generators()));
  const double cutoff = dual.eigen_cutoff;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    FourierGenerator psi;
    psi.label = "psi_" + gens.generator(i).label;
    psi.support_lo = lo;
    psi.support_hi = hi;
    psi.transform = [base, cutoff, i](double xi) {
      const CMatrix pinv = pseudo_inverse_at(*base, reduce_to_fundamental(xi), cutoff);
      cplx sum{};
      for (std::size_t l = 0; l < base->size(); ++l) sum += pinv(i, l) * base->transform(l, xi);
      return sum;
    };
    dual.fourier.push_back(std::move(psi));
  }

  // Time samples: one pseudoinverse per torus fiber, shared by every row.
  const Grid& grid = gens.time_grid();
  const long L = period_length(grid);
  std::map<long, CMatrix> fibers;
  auto fiber_pinv = [&](long m) -> const CMatrix& {
    const long r = fiber_of(m, L);
    auto it = fibers.find(r);
    if (it == fibers.end()) {
      it = fibers.emplace(r, pseudo_inverse_at(gens, kTwoPi * r / L, cutoff)).first;
    }
    return it->second;
  };
  const Weight decay = Weight::polynomial(4.0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto spectrum = [&](double xi) {
      const long m = std::lround(xi * static_cast<double>(L) / kTwoPi);
      const CMatrix& pinv = fiber_pinv(m);
      cplx sum{};
      for (std::size_t l = 0; l < gens.size(); ++l) sum += pinv(i, l) * gens.transform(l, xi);
      return sum;
    };
    auto t = periodic_inverse_transform(spectrum, lo, hi, grid);
    dual.amalgam_norms.push_back(amalgam_norm(t, 1.0, decay));
    dual.time.push_back(std::move(t));
  }
  return dual;
}

AnalysisOperator::AnalysisOperator(const std::vector<SampledFunction>& functions) {
  if (functions.empty()) throw std::invalid_argument("analysis needs at least one function");
  grid_ = functions.front().grid;
  period_length(grid_);
  for (const auto& g : functions) {
    if (!(g.grid == grid_)) throw std::invalid_argument("analysis functions must share a grid");
    auto spec = dft(g.values, FftDirection::Forward);
    for (auto& v : spec) v = std::conj(v);
    spectra_.push_back(std::move(spec));
  }
}

CoefficientArray AnalysisOperator::apply(const SampledFunction& f, int j_min, int j_max) const {
  if (!(f.grid == grid_)) throw std::invalid_argument("function grid differs from analysis grid");
  const long L = period_length(grid_);
  if (j_max < j_min || j_max - j_min + 1 > L) {
    throw std::invalid_argument("translate range must be nonempty and at most one period wide");
  }
  const long q = grid_.samples_per_unit();
  const auto N = static_cast<long>(grid_.n);
  const auto F = dft(f.values, FftDirection::Forward);
  CoefficientArray c(static_cast<int>(rows()), j_min, j_max);
  std::vector<cplx> prod(F.size());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t k = 0; k < F.size(); ++k) prod[k] = F[k] * spectra_[i][k];
    const auto corr = dft(prod, FftDirection::Backward);
    const double scale = grid_.dx / static_cast<double>(N);
    for (int j = j_min; j <= j_max; ++j) {
      long s = (static_cast<long>(j) * q) % N;
      if (s < 0) s += N;
      c.at(static_cast<int>(i), j) = corr[static_cast<std::size_t>(s)] * scale;
    }
  }
  return c;
}

CoefficientArray AnalysisOperator::apply(const SampledFunction& f) const {
  const long L = period_length(grid_);
  const int j_min = -static_cast<int>(L / 2);
  return apply(f, j_min, j_min + static_cast<int>(L) - 1);
}

CoefficientArray analyze(const SampledFunction& f, const std::vector<SampledFunction>& functions,
                         int j_min, int j_max, Boundary boundary) {
  if (boundary == Boundary::Periodic) return AnalysisOperator(functions).apply(f, j_min, j_max);
  CoefficientArray c(static_cast<int>(functions.size()), j_min, j_max);
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const auto row = translate_inner_products(f, functions[i], j_min, j_max, Boundary::Truncate);
    std::copy(row.begin(), row.end(), c.row(static_cast<int>(i)).begin());
  }
  return c;
}

SampledFunction synthesize(const std::vector<SampledFunction>& functions,
                           const CoefficientArray& c, Boundary boundary) {
  if (functions.empty() || static_cast<std::size_t>(c.rows()) != functions.size()) {
    throw std::invalid_argument("coefficient rows must match the number of functions");
  }
  SampledFunction out(functions.front().grid, functions.front().domain);
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const auto part = semi_convolve(functions[i], c.row(static_cast<int>(i)), c.j_min(), boundary);
    for (std::size_t n = 0; n < out.size(); ++n) out.values[n] += part.values[n];
  }
  return out;
}

CMatrix biorthogonality_matrix(const GeneratorSet& gens, const DualSet& duals) {
  if (!gens.has_time_data() || duals.time.size() != gens.size()) {
    throw std::invalid_argument("biorthogonality needs time samples for generators and duals");
  }
  CMatrix b(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      b(i, k) = inner_product(gens.time()[i], duals.time[k]);
    }
  }
  return b;
}

double max_identity_deviation(const CMatrix& b) {
  double dev = 0.0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      dev = std::max(dev, std::abs(b(i, k) - (i == k ? cplx{1.0} : cplx{})));
    }
  }
  return dev;
}

CoefficientArray random_coefficients(std::size_t rows, int support, const Weight& mu,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_coefficients(rows, support, mu, rng);
}

ReconstructionReport reconstruction_test(const GeneratorSet& gens, const DualSet& duals,
                                         int n_trials, std::uint64_t seed, int support) {
  if (n_trials <= 0) throw std::invalid_argument("n_trials must be positive");
  const AnalysisOperator by_dual(duals.time);
  const AnalysisOperator by_gens(gens.time());
  std::mt19937_64 rng(seed);
  ReconstructionReport report;
  report.trials = n_trials;
  for (int t = 0; t < n_trials; ++t) {
    const auto c = draw_coefficients(gens.size(), support, Weight::constant(), rng);
    const auto f = synthesize(gens.time(), c);
    const auto back = synthesize(gens.time(), by_dual.apply(f));
    const auto swapped = synthesize(duals.time, by_gens.apply(f));
    report.max_error = std::max(report.max_error, relative_error(f, back));
    report.max_error_symmetric = std::max(report.max_error_symmetric, relative_error(f, swapped));
  }
  return report;
}

double pframe_ratio(const AnalysisOperator& analysis, const SampledFunction& f, double p,
                    const Weight& mu) {
  const double denom = function_norm(f, p, mu);
  if (!(denom > 0.0)) throw std::invalid_argument("p-frame ratio of the zero function");
  const auto c = analysis.apply(f);
  double num = 0.0;
  for (int i = 0; i < c.rows(); ++i) num += sequence_norm(c, i, p, mu);
  return num / denom;
}

FrameConstants pframe_constants(const GeneratorSet& gens, double p, const Weight& mu,
                                int n_trials, std::uint64_t seed, const PFrameOptions& options) {
  if (!gens.has_time_data()) {
    throw std::invalid_argument("p-frame constants need generators with time-domain samples");
  }
  if (n_trials <= 0) throw std::invalid_argument("n_trials must be positive");
  FrameConstants fc;
  fc.p = p;
  fc.mu = mu;
  fc.n_trials = n_trials;
  fc.seed = seed;
  fc.lower = kInfinity;

  const AnalysisOperator analysis(gens.time());
  std::optional<AnalysisOperator> dual_analysis;
  if (options.duals != nullptr) {
    dual_analysis.emplace(options.duals->time);
    fc.dual_lower = kInfinity;
    fc.dual_upper = 0.0;
  }
  auto record = [&](const SampledFunction& f) {
    const double r = pframe_ratio(analysis, f, p, mu);
    fc.lower = std::min(fc.lower, r);
    fc.upper = std::max(fc.upper, r);
    if (dual_analysis) {
      const double d = pframe_ratio(*dual_analysis, f, p, mu);
      fc.dual_lower = std::min(*fc.dual_lower, d);
      fc.dual_upper = std::max(*fc.dual_upper, d);
    }
    return r;
  };

  std::mt19937_64 rng(seed);
  for (int t = 0; t < n_trials; ++t) {
    const auto c = draw_coefficients(gens.size(), options.support, mu, rng);
    fc.ratios.push_back(record(synthesize(gens.time(), c)));
  }

  if (options.adversarial) {
    const long L = period_length(gens.time_grid());
    std::vector<HermitianEigen> eigs;
    double lambda_max = 0.0;
    for (long r = -L / 2; r < L - L / 2; ++r) {
      eigs.push_back(gram_eigen_at(gens, kTwoPi * r / L));
      lambda_max = std::max(lambda_max, eigs.back().values.back());
    }
    const double cutoff = std::pow(options.tolerance, 2) * lambda_max;
    double best = kInfinity;
    std::size_t best_fiber = 0;
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < eigs.size(); ++k) {
      for (std::size_t e = 0; e < eigs[k].values.size(); ++e) {
        const double lambda = eigs[k].values[e];
        if (lambda > cutoff && lambda < best) {
          best = lambda;
          best_fiber = k;
          best_index = e;
        }
      }
    }
    if (std::isfinite(best)) {
      const double eta = kTwoPi * (static_cast<double>(best_fiber) - static_cast<double>(L / 2)) /
                         static_cast<double>(L);
      const int j_min = -static_cast<int>(L / 2);
      CoefficientArray c(static_cast<int>(gens.size()), j_min, j_min + static_cast<int>(L) - 1);
      for (int i = 0; i < c.rows(); ++i) {
        const cplx v = std::conj(eigs[best_fiber].vectors(static_cast<std::size_t>(i), best_index));
        for (int j = c.j_min(); j <= c.j_max(); ++j) {
          c.at(i, j) = v * std::polar(1.0, eta * j);
        }
      }
      fc.adversarial_ratio = record(synthesize(gens.time(), c));
      fc.adversarial_frequency = eta;
    }
  }
  return fc;
}

CrossPReport cross_p_consistency(const GeneratorSet& gens, const Weight& mu, int n_trials,
                                 std::uint64_t seed, const PFrameOptions& options) {
  const auto verdict = frame_verdict(gens, kDefaultGridPoints, options.tolerance);
  if (!verdict.positive()) {
    throw NotAFrameError("cross-p consistency requires a positive frame verdict");
  }
  CrossPReport report;
  report.all_positive = true;
  for (double p : {1.0, 2.0, kInfinity}) {
    auto fc = pframe_constants(gens, p, mu, n_trials, seed, options);
    report.all_positive = report.all_positive && fc.lower > 0.0 && std::isfinite(fc.upper);
    report.blocks.push_back(std::move(fc));
  }
  return report;
}

}  // namespace sisframe
