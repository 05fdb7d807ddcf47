#include "sisframe/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sisframe/fft.hpp"

namespace sisframe {

namespace {

constexpr double kPi = std::numbers::pi;

double exp_ramp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void require_increasing(const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("generator indices must be non-empty");
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1]) {
      throw std::invalid_argument("generator indices must be strictly increasing");
    }
  }
}

}  // namespace

BumpProfile parse_profile(const std::string& text) {
  if (text == "exp") return BumpProfile::Exp;
  if (text == "poly") return BumpProfile::Poly;
  throw std::invalid_argument("unknown bump profile '" + text + "' (expected exp or poly)");
}

std::string to_string(BumpProfile profile) {
  return profile == BumpProfile::Exp ? "exp" : "poly";
}

Bump::Bump(BumpSpec spec) : spec_(spec) {
  if (!(spec.epsilon > 0.0 && spec.epsilon < 0.25)) {
    throw std::invalid_argument("bump epsilon must satisfy 0 < eps < 1/4");
  }
  if (spec.sign != 1 && spec.sign != -1) {
    throw std::invalid_argument("bump modulation sign must be +1 or -1");
  }
}

double Bump::step(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (spec_.profile == BumpProfile::Poly) {
    return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
  }
  const double a = exp_ramp(t);
  return a / (a + exp_ramp(1.0 - t));
}

double Bump::operator()(double xi) const {
  const double a = std::abs(xi);
  if (a >= kPi) return 0.0;
  if (a <= kPi - spec_.epsilon) return 1.0;
  return step((kPi - a) / spec_.epsilon);
}

double Bump::partition_sum(double xi) const {
  const long centre = -std::lround(xi / kPi);
  double total = 0.0;
  for (long k = centre - 2; k <= centre + 2; ++k) total += (*this)(xi + k * kPi);
  return total;
}

double Bump::generator(int k, double xi) const {
  const double arg = xi + spec_.sign * k * kPi;
  const double value = (*this)(arg);
  if (!spec_.normalized || value == 0.0) return value;
  return value / partition_sum(arg);
}

FourierGenerator sampled_generator(std::string label, const SampledFunction& data) {
  if (data.domain != Domain::Frequency) {
    throw std::invalid_argument("sampled_generator: expected frequency-domain data");
  }
  if (data.size() < 2) throw std::invalid_argument("sampled_generator: need two samples");
  auto shared = std::make_shared<SampledFunction>(data);
  FourierGenerator gen;
  gen.label = std::move(label);
  gen.support_lo = data.grid.x0;
  gen.support_hi = data.grid.point(data.size() - 1);
  gen.transform = [shared](double xi) -> cplx {
    const auto& g = shared->grid;
    const double pos = (xi - g.x0) / g.dx;
    if (pos < 0.0 || pos > static_cast<double>(g.n - 1)) return {};
    const auto i = std::min(static_cast<std::size_t>(pos), g.n - 2);
    const double w = pos - static_cast<double>(i);
    return (1.0 - w) * shared->values[i] + w * shared->values[i + 1];
  };
  return gen;
}

GeneratorSet GeneratorSet::bump_family(std::vector<int> indices, const BumpSpec& spec) {
  require_increasing(indices);
  const Bump bump(spec);
  GeneratorSet set;
  for (int k : indices) {
    FourierGenerator gen;
    gen.label = std::to_string(k);
    gen.support_lo = -kPi - spec.sign * k * kPi;
    gen.support_hi = kPi - spec.sign * k * kPi;
    gen.transform = [bump, k](double xi) -> cplx { return bump.generator(k, xi); };
    set.generators_.push_back(std::move(gen));
  }
  set.indices_ = std::move(indices);
  set.bump_ = spec;
  return set;
}

GeneratorSet GeneratorSet::from_fourier(std::vector<FourierGenerator> generators) {
  if (generators.empty()) throw std::invalid_argument("generator set must be non-empty");
  for (const auto& g : generators) {
    if (!g.transform || !(g.support_hi > g.support_lo)) {
      throw std::invalid_argument("generator '" + g.label + "' has no transform or support");
    }
  }
  GeneratorSet set;
  set.generators_ = std::move(generators);
  return set;
}

void GeneratorSet::synthesize(const Grid& time_grid, const BuildOptions& options) {
  if (time_grid.samples_per_unit() <= 0) {
    throw std::invalid_argument("time grid must have an integer number of samples per unit");
  }
  if (std::abs(time_grid.length() - std::round(time_grid.length())) > 1e-9) {
    throw std::invalid_argument("time window length must be an integer");
  }
  double step = options.freq_step;
  if (bump_) {
    if (step == 0.0) step = bump_->epsilon / 16.0;
    if (step > bump_->epsilon / 8.0) {
      throw std::invalid_argument(
          "frequency step too coarse to resolve the transition band (need dxi <= eps/8)");
    }
  }
  if (step < 0.0) throw std::invalid_argument("frequency step must be positive");

  const Weight decay = Weight::polynomial(options.decay_exponent);
  std::vector<SampledFunction> time;
  std::vector<SampledFunction> fourier;
  std::vector<GeneratorDiagnostics> diags;
  const int q = time_grid.samples_per_unit();
  for (const auto& gen : generators_) {
    auto t = periodic_inverse_transform(gen.transform, gen.support_lo, gen.support_hi,
                                        time_grid);

    const double width = gen.support_hi - gen.support_lo;
    const double fstep = step > 0.0 ? step : width / 4096.0;
    const auto count = static_cast<std::size_t>(std::ceil(width / fstep)) + 1;
    SampledFunction f(Grid{gen.support_lo, fstep, count}, Domain::Frequency);
    for (std::size_t i = 0; i < count; ++i) f.values[i] = gen.transform(f.grid.point(i));

    GeneratorDiagnostics d;
    d.amalgam_norm = amalgam_norm(t, 1.0, decay);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double mag = std::abs(t.values[i]);
      d.peak_magnitude = std::max(d.peak_magnitude, mag);
      d.decay_constant = std::max(d.decay_constant, mag * decay(t.grid.point(i)));
      if (i < static_cast<std::size_t>(q) || i + q >= t.size()) {
        d.edge_magnitude = std::max(d.edge_magnitude, mag);
      }
    }
    time.push_back(std::move(t));
    fourier.push_back(std::move(f));
    diags.push_back(d);
  }
  time_grid_ = time_grid;
  time_ = std::move(time);
  fourier_ = std::move(fourier);
  diagnostics_ = std::move(diags);
}

GeneratorSet build_generators(std::vector<int> indices, const BumpSpec& spec,
                              const Grid& time_grid, const BuildOptions& options) {
  auto set = GeneratorSet::bump_family(std::move(indices), spec);
  set.synthesize(time_grid, options);
  return set;
}

}  // namespace sisframe
