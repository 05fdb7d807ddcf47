#include "sisframe/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sisframe {

namespace {

void require_valid_p(double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("norm exponent p must satisfy p >= 1 (got " +
                                std::to_string(p) + ")");
  }
}

int require_unit_samples(const Grid& grid, const char* what) {
  const int q = grid.samples_per_unit();
  if (q <= 0) {
    throw std::invalid_argument(std::string(what) +
                                ": grid step must satisfy 1/dx integer");
  }
  return q;
}

void require_time(const SampledFunction& f, const char* what) {
  if (f.domain != Domain::Time) {
    throw std::invalid_argument(std::string(what) + ": expected a time-domain function");
  }
}

bool same_step(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); }

// Accumulates (sum |a_i|^p)^{1/p} or max |a_i| without overflow for large p.
class PNormAccumulator {
 public:
  explicit PNormAccumulator(double p) : p_(p) {}

  void add(double magnitude) {
    if (std::isinf(p_)) {
      sup_ = std::max(sup_, magnitude);
    } else if (magnitude > 0.0) {
      if (magnitude > scale_) {
        sum_ = sum_ * std::pow(scale_ / magnitude, p_) + 1.0;
        scale_ = magnitude;
      } else {
        sum_ += std::pow(magnitude / scale_, p_);
      }
    }
  }

  // Scales the sum by `measure` before taking the root (Riemann weights).
  double result(double measure = 1.0) const {
    if (std::isinf(p_)) return sup_;
    if (scale_ == 0.0) return 0.0;
    return scale_ * std::pow(sum_ * measure, 1.0 / p_);
  }

 private:
  double p_;
  double sum_ = 0.0;
  double scale_ = 0.0;
  double sup_ = 0.0;
};

// Index ranges [first, first+q) of the complete unit cells [k, k+1) on a grid.
struct Cell {
  long k;
  std::size_t first;
};

std::vector<Cell> unit_cells(const Grid& grid, int q) {
  std::vector<Cell> cells;
  const long k_lo = static_cast<long>(std::floor(grid.x0));
  const long k_hi = static_cast<long>(std::ceil(grid.point(grid.n)));
  for (long k = k_lo; k <= k_hi; ++k) {
    const double pos = (static_cast<double>(k) - grid.x0) / grid.dx;
    const double first = std::ceil(pos - 1e-9);
    if (first < 0.0) continue;
    const auto idx = static_cast<std::size_t>(first);
    if (idx + static_cast<std::size_t>(q) > grid.n) break;
    cells.push_back({k, idx});
  }
  return cells;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      r.num = std::stoll(text, &used);
      r.den = 1;
      if (used != text.size()) throw std::invalid_argument("trailing");
    } else {
      const std::string a = text.substr(0, slash);
      const std::string b = text.substr(slash + 1);
      r.num = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument("trailing");
      r.den = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "' (expected num/den)");
  }
  if (r.num <= 0 || r.den <= 0) {
    throw std::invalid_argument("rational '" + text + "' must be positive");
  }
  const auto g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

int Grid::samples_per_unit() const {
  if (!(dx > 0.0)) return 0;
  const double inv = 1.0 / dx;
  const double q = std::round(inv);
  if (q < 1.0 || std::abs(q * dx - 1.0) > 1e-12) return 0;
  return static_cast<int>(q);
}

Grid Grid::time_window(int half_width, Rational dx) {
  if (half_width <= 0) {
    throw std::invalid_argument("time window half-width T must be a positive integer");
  }
  if (dx.num != 1) {
    throw std::invalid_argument("dx must be 1/q for an integer q (got " + dx.to_string() + ")");
  }
  Grid g;
  g.x0 = -static_cast<double>(half_width);
  g.dx = dx.value();
  g.n = static_cast<std::size_t>(2 * half_width) * static_cast<std::size_t>(dx.den);
  return g;
}

SampledFunction::SampledFunction(Grid g, std::vector<cplx> v, Domain d)
    : grid(g), values(std::move(v)), domain(d) {
  if (values.size() != grid.n) {
    throw std::invalid_argument("SampledFunction: value count does not match grid size");
  }
}

SampledFunction SampledFunction::scaled(cplx factor) const {
  SampledFunction out = *this;
  for (auto& v : out.values) v *= factor;
  return out;
}

CoefficientArray::CoefficientArray(int rows, int j_min, int j_max)
    : rows_(rows), j_min_(j_min), j_max_(j_max) {
  if (rows < 1 || j_max < j_min) {
    throw std::invalid_argument("CoefficientArray: need rows >= 1 and j_min <= j_max");
  }
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(width()), cplx{});
}

cplx& CoefficientArray::at(int row, int j) {
  return data_.at(static_cast<std::size_t>(row) * width() + (j - j_min_));
}

const cplx& CoefficientArray::at(int row, int j) const {
  return data_.at(static_cast<std::size_t>(row) * width() + (j - j_min_));
}

std::span<cplx> CoefficientArray::row(int i) {
  return std::span<cplx>(data_).subspan(static_cast<std::size_t>(i) * width(), width());
}

std::span<const cplx> CoefficientArray::row(int i) const {
  return std::span<const cplx>(data_).subspan(static_cast<std::size_t>(i) * width(), width());
}

double sequence_norm(std::span<const cplx> c, int j_min, double p, const Weight& mu) {
  require_valid_p(p);
  PNormAccumulator acc(p);
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    acc.add(std::abs(c[idx]) * mu(static_cast<double>(j_min + static_cast<int>(idx))));
  }
  return acc.result();
}

double sequence_norm(const CoefficientArray& c, int row, double p, const Weight& mu) {
  return sequence_norm(c.row(row), c.j_min(), p, mu);
}

double function_norm(const SampledFunction& f, double p, const Weight& mu) {
  require_valid_p(p);
  require_time(f, "function_norm");
  PNormAccumulator acc(p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc.add(std::abs(f.values[i]) * mu(f.grid.point(i)));
  }
  return acc.result(f.grid.dx);
}

double amalgam_norm(const SampledFunction& f, double p, const Weight& omega) {
  require_valid_p(p);
  require_time(f, "amalgam_norm");
  const int q = require_unit_samples(f.grid, "amalgam_norm");
  const auto cells = unit_cells(f.grid, q);
  if (cells.empty()) {
    throw std::invalid_argument("amalgam_norm: grid shorter than one unit cell");
  }
  PNormAccumulator acc(p);
  for (const auto& cell : cells) {
    double sup = 0.0;
    for (int s = 0; s < q; ++s) sup = std::max(sup, std::abs(f.values[cell.first + s]));
    acc.add(sup * omega(static_cast<double>(cell.k)));
  }
  return acc.result();
}

double periodized_norm(const SampledFunction& f, double p, const Weight& omega) {
  require_valid_p(p);
  require_time(f, "periodized_norm");
  const int q = require_unit_samples(f.grid, "periodized_norm");
  const auto cells = unit_cells(f.grid, q);
  if (cells.empty()) {
    throw std::invalid_argument("periodized_norm: grid shorter than one unit cell");
  }
  PNormAccumulator acc(p);
  for (int s = 0; s < q; ++s) {
    double total = 0.0;
    for (const auto& cell : cells) {
      const std::size_t i = cell.first + s;
      total += std::abs(f.values[i]) * omega(f.grid.point(i));
    }
    acc.add(total);
  }
  return acc.result(f.grid.dx);
}

SampledFunction semi_convolve(const SampledFunction& f, std::span<const cplx> c,
                              int j_min, Boundary boundary) {
  require_time(f, "semi_convolve");
  const int q = require_unit_samples(f.grid, "semi_convolve");
  SampledFunction out(f.grid, Domain::Time);
  const auto n = static_cast<long>(f.size());
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const cplx cj = c[idx];
    if (cj == cplx{}) continue;
    const long shift = static_cast<long>(j_min + static_cast<long>(idx)) * q;
    if (boundary == Boundary::Periodic) {
      const long s = ((shift % n) + n) % n;
      for (long i = 0; i < n; ++i) {
        long src = i - s;
        if (src < 0) src += n;
        out.values[i] += cj * f.values[src];
      }
    } else {
      const long lo = std::max(0L, shift);
      const long hi = std::min(n, n + shift);
      for (long i = lo; i < hi; ++i) out.values[i] += cj * f.values[i - shift];
    }
  }
  return out;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g) {
  require_time(f, "convolve");
  require_time(g, "convolve");
  if (!same_step(f.grid.dx, g.grid.dx)) {
    throw std::invalid_argument("convolve: grids must share the same step");
  }
  if (f.size() == 0 || g.size() == 0) {
    throw std::invalid_argument("convolve: empty input");
  }
  Grid out_grid{f.grid.x0 + g.grid.x0, f.grid.dx, f.size() + g.size() - 1};
  SampledFunction out(out_grid, Domain::Time);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx fi = f.values[i] * f.grid.dx;
    if (fi == cplx{}) continue;
    for (std::size_t k = 0; k < g.size(); ++k) out.values[i + k] += fi * g.values[k];
  }
  return out;
}

std::vector<cplx> convolve_sequences(std::span<const cplx> c, int c_min,
                                     std::span<const cplx> d, int d_min, int* out_min) {
  if (c.empty() || d.empty()) {
    throw std::invalid_argument("convolve_sequences: empty input");
  }
  std::vector<cplx> out(c.size() + d.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = 0; k < d.size(); ++k) out[i + k] += c[i] * d[k];
  }
  if (out_min != nullptr) *out_min = c_min + d_min;
  return out;
}

std::vector<cplx> translate_inner_products(const SampledFunction& f,
                                           const SampledFunction& g, int j_min,
                                           int j_max, Boundary boundary) {
  require_time(f, "translate_inner_products");
  require_time(g, "translate_inner_products");
  if (!(f.grid == g.grid)) {
    throw std::invalid_argument("translate_inner_products: f and g must share a grid");
  }
  if (j_max < j_min) {
    throw std::invalid_argument("translate_inner_products: empty translate range");
  }
  const int q = require_unit_samples(f.grid, "translate_inner_products");
  const auto n = static_cast<long>(f.size());
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(j_max - j_min + 1));
  for (int j = j_min; j <= j_max; ++j) {
    const long shift = static_cast<long>(j) * q;
    cplx acc{};
    if (boundary == Boundary::Periodic) {
      const long s = ((shift % n) + n) % n;
      for (long i = 0; i < n; ++i) {
        long src = i - s;
        if (src < 0) src += n;
        acc += f.values[i] * std::conj(g.values[src]);
      }
    } else {
      const long lo = std::max(0L, shift);
      const long hi = std::min(n, n + shift);
      for (long i = lo; i < hi; ++i) acc += f.values[i] * std::conj(g.values[i - shift]);
    }
    out.push_back(acc * f.grid.dx);
  }
  return out;
}

cplx inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid == g.grid)) {
    throw std::invalid_argument("inner_product: functions must share a grid");
  }
  cplx acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f.values[i] * std::conj(g.values[i]);
  return acc * f.grid.dx;
}

}  // namespace sisframe
