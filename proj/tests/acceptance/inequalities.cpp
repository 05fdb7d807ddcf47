#include "inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "sisframe/generators.hpp"
#include "sisframe/signal.hpp"
#include "sisframe/weights.hpp"

namespace sisframe::acceptance {

namespace {

constexpr int kHalfWindow = 16;
constexpr std::int64_t kSamplesPerUnit = 32;

// (mu, omega) with mu(x+y) <= omega(x) mu(y) and constant 1.
struct WeightPair {
  Weight mu;
  Weight omega;
};

struct Instance {
  double p = 1.0;
  WeightPair w;
  SampledFunction f;            // on the shared window
  std::vector<cplx> c;
  int c_min = 0;
  std::size_t generator = 0;
  std::string describe() const {
    std::ostringstream os;
    os << "p=" << (std::isinf(p) ? std::string("inf") : std::to_string(p))
       << " mu=" << w.mu.to_string() << " omega=" << w.omega.to_string()
       << " |c|=" << c.size() << " g=" << generator;
    return os.str();
  }
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, int max_cells)
      : max_cells_(max_cells),
        rng_(seed),
        grid_(Grid::time_window(kHalfWindow, Rational{1, kSamplesPerUnit})),
        gens_(build_generators({0, 1, 2, 3}, {}, grid_)) {
    pairs_ = {{Weight::constant(), Weight::constant()},
              {Weight::polynomial(2.0), Weight::polynomial(2.0)},
              {Weight::polynomial(1.0), Weight::polynomial(2.0)},
              {Weight::subexponential(0.5, 0.5), Weight::subexponential(0.5, 0.5)}};
  }

  const Grid& grid() const { return grid_; }
  const SampledFunction& generator(std::size_t k) const { return gens_.time()[k]; }

  Instance draw() {
    Instance in;
    const double ps[] = {1.0, 2.0, kInfinity};
    const int pick = uniform_int(0, 3);
    in.p = pick < 3 ? ps[pick] : 1.0 + 3.0 * unit_(rng_);
    in.w = pairs_[static_cast<std::size_t>(uniform_int(0, static_cast<int>(pairs_.size()) - 1))];
    in.f = noise(uniform_int(1, max_cells_), uniform_int(-6, 5));
    const int len = uniform_int(1, 5);
    in.c_min = uniform_int(-4, 4 - len + 1);
    for (int j = 0; j < len; ++j) in.c.push_back(gauss());
    in.generator = static_cast<std::size_t>(uniform_int(0, 3));
    return in;
  }

  // White noise on [offset, offset + cells), zero elsewhere in the window.
  SampledFunction noise(int cells, int offset) {
    SampledFunction f(grid_, Domain::Time);
    for (std::size_t n = 0; n < grid_.n; ++n) {
      const double x = grid_.point(n);
      if (x >= offset && x < offset + cells) f.values[n] = gauss();
    }
    return f;
  }

  // Same noise on its own compact grid (for the direct convolutions).
  SampledFunction compact_noise(int cells, int offset) {
    SampledFunction f(Grid{static_cast<double>(offset), 1.0 / kSamplesPerUnit,
                           static_cast<std::size_t>(cells * kSamplesPerUnit)},
                      Domain::Time);
    for (auto& v : f.values) v = gauss();
    return f;
  }

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  cplx gauss() { return {normal_(rng_), normal_(rng_)}; }

 private:
  int max_cells_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> unit_;
  Grid grid_;
  GeneratorSet gens_;
  std::vector<WeightPair> pairs_;
};

double weighted_l1(std::span<const cplx> c, int j_min, const Weight& w) {
  return sequence_norm(c, j_min, 1.0, w);
}

struct Tally {
  InequalityResult r;
  double slack;
  void add(double lhs, double rhs, const std::string& what) {
    ++r.instances;
    const double ratio = lhs / rhs;
    if (lhs <= rhs * (1.0 + slack)) ++r.held;
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.worst = what;
    }
  }
};

}  // namespace

std::vector<InequalityResult> run_inequality_suite(std::uint64_t seed, int instances,
                                                   double slack, int max_cells) {
  Sampler s(seed, max_cells);
  using Check = std::function<void(Instance&, Tally&)>;
  const std::vector<std::pair<std::string, Check>> checks{
      {"analysis sequence: |<f,g(.-j)>|_{l^p_mu} <= |f|_{L^p_mu} |g|_{W^1_omega}",
       [&](Instance& in, Tally& t) {
         const auto& g = s.generator(in.generator);
         const auto seq = translate_inner_products(in.f, g, -2 * kHalfWindow, 2 * kHalfWindow,
                                                   Boundary::Truncate);
         t.add(sequence_norm(seq, -2 * kHalfWindow, in.p, in.w.mu),
               function_norm(in.f, in.p, in.w.mu) * amalgam_norm(g, 1.0, in.w.omega),
               in.describe());
       }},
      {"semi-convolution a): |f*'c|_{L^p_mu} <= |c|_{l^p_mu} |f|_{L^p_omega}",
       [&](Instance& in, Tally& t) {
         const auto fc = semi_convolve(in.f, in.c, in.c_min, Boundary::Truncate);
         t.add(function_norm(fc, in.p, in.w.mu),
               sequence_norm(in.c, in.c_min, in.p, in.w.mu) *
                   function_norm(in.f, in.p, in.w.omega),
               in.describe());
       }},
      {"semi-convolution b): |f*'c|_{LL^p_mu} <= |c|_{l^1_mu} |f|_{LL^p_omega}",
       [&](Instance& in, Tally& t) {
         const auto fc = semi_convolve(in.f, in.c, in.c_min, Boundary::Truncate);
         t.add(periodized_norm(fc, in.p, in.w.mu),
               weighted_l1(in.c, in.c_min, in.w.mu) * periodized_norm(in.f, in.p, in.w.omega),
               in.describe());
       }},
      {"semi-convolution c): |f*'c|_{W^p_mu} <= |c|_{l^1_mu} |f|_{W^p_omega}",
       [&](Instance& in, Tally& t) {
         const auto fc = semi_convolve(in.f, in.c, in.c_min, Boundary::Truncate);
         t.add(amalgam_norm(fc, in.p, in.w.mu),
               weighted_l1(in.c, in.c_min, in.w.mu) * amalgam_norm(in.f, in.p, in.w.omega),
               in.describe());
       }},
      {"semi-convolution d): |f*'c|_{W^p_mu} <= |c|_{l^p_mu} |f|_{W^1_omega}",
       [&](Instance& in, Tally& t) {
         const auto& g = s.generator(in.generator);
         const auto fc = semi_convolve(g, in.c, in.c_min, Boundary::Truncate);
         // g is truncated to the window; shifting by |j| <= 4 loses at most
         // its edge cells, which only lowers the left side.
         t.add(amalgam_norm(fc, in.p, in.w.mu),
               sequence_norm(in.c, in.c_min, in.p, in.w.mu) * amalgam_norm(g, 1.0, in.w.omega),
               in.describe());
       }},
      {"convolution 1): |f*g|_{L^p_mu} <= |f|_{L^p_mu} |g|_{L^1_omega}",
       [&](Instance& in, Tally& t) {
         const auto f = s.compact_noise(s.uniform_int(1, 4), s.uniform_int(-6, 5));
         const auto g = s.compact_noise(s.uniform_int(1, 4), s.uniform_int(-6, 5));
         t.add(function_norm(convolve(f, g), in.p, in.w.mu),
               function_norm(f, in.p, in.w.mu) * function_norm(g, 1.0, in.w.omega),
               in.describe());
       }},
      {"convolution 2): |f*g|_{W^p_mu} <= |f|_{L^p_mu} |g|_{W^1_omega}",
       [&](Instance& in, Tally& t) {
         const auto f = s.compact_noise(s.uniform_int(1, 4), s.uniform_int(-6, 5));
         const auto g = s.compact_noise(s.uniform_int(1, 4), s.uniform_int(-6, 5));
         t.add(amalgam_norm(convolve(f, g), in.p, in.w.mu),
               function_norm(f, in.p, in.w.mu) * amalgam_norm(g, 1.0, in.w.omega),
               in.describe());
       }},
      {"convolution 3): |c*d|_{l^p_mu} <= |c|_{l^p_mu} |d|_{l^1_omega}",
       [&](Instance& in, Tally& t) {
         std::vector<cplx> d(static_cast<std::size_t>(s.uniform_int(1, 6)));
         for (auto& v : d) v = s.gauss();
         const int d_min = s.uniform_int(-5, 5);
         int out_min = 0;
         const auto cd = convolve_sequences(in.c, in.c_min, d, d_min, &out_min);
         t.add(sequence_norm(cd, out_min, in.p, in.w.mu),
               sequence_norm(in.c, in.c_min, in.p, in.w.mu) * weighted_l1(d, d_min, in.w.omega),
               in.describe());
       }},
  };

  std::vector<InequalityResult> results;
  for (const auto& [name, check] : checks) {
    Tally t{{name, 0, 0, 0.0, {}}, slack};
    for (int k = 0; k < instances; ++k) {
      Instance in = s.draw();
      check(in, t);
    }
    results.push_back(t.r);
  }
  return results;
}

}  // namespace sisframe::acceptance
