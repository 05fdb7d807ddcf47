#pragma once

// Uniformly gridded functions, finitely supported coefficient families, the
// weighted norms used throughout (l^p_mu, L^p_mu, Wiener amalgam W^p_omega and
// the periodized norm script-L^p_omega) and the semi-convolution f *' c.
//
// Quadrature is the left-endpoint Riemann sum.  For time-domain grids with an
// integer number q = 1/dx of samples per unit, translation by j in Z is the
// index shift j*q, so no interpolation enters any of the norm inequalities.

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sisframe/weights.hpp"

namespace sisframe {

using cplx = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exact step size "num/den" (e.g. "1/256").
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Grid {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = 0;

  double point(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  double length() const { return static_cast<double>(n) * dx; }

  /// 1/dx when it is a positive integer, 0 otherwise.
  int samples_per_unit() const;

  /// [-T, T) sampled with step dx; requires 1/dx integer and T integer.
  static Grid time_window(int half_width, Rational dx);

  friend bool operator==(const Grid&, const Grid&) = default;
};

enum class Domain : std::uint8_t { Time = 0, Frequency = 1 };

struct SampledFunction {
  Grid grid;
  std::vector<cplx> values;
  Domain domain = Domain::Time;

  SampledFunction() = default;
  SampledFunction(Grid g, Domain d) : grid(g), values(g.n), domain(d) {}
  SampledFunction(Grid g, std::vector<cplx> v, Domain d);

  std::size_t size() const { return values.size(); }
  SampledFunction scaled(cplx factor) const;
};

/// r rows (one per generator), columns j_min..j_max.
class CoefficientArray {
 public:
  CoefficientArray() = default;
  CoefficientArray(int rows, int j_min, int j_max);

  int rows() const { return rows_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  int width() const { return j_max_ - j_min_ + 1; }

  cplx& at(int row, int j);
  const cplx& at(int row, int j) const;

  std::span<cplx> row(int i);
  std::span<const cplx> row(int i) const;

 private:
  int rows_ = 0;
  int j_min_ = 0;
  int j_max_ = -1;
  std::vector<cplx> data_;
};

/// (sum_j |c_j mu(j)|^p)^{1/p}; p = kInfinity gives sup_j |c_j| mu(j).
double sequence_norm(std::span<const cplx> c, int j_min, double p, const Weight& mu);
double sequence_norm(const CoefficientArray& c, int row, double p, const Weight& mu);

/// Riemann-sum approximation of ||f mu||_{L^p}; max over the grid for p = inf.
double function_norm(const SampledFunction& f, double p, const Weight& mu);

/// Wiener amalgam norm (sum_k sup_{[k,k+1)} |f|^p omega(k)^p)^{1/p} over the
/// unit cells fully covered by the grid.  The in-cell sup is the max over the
/// cell's samples, which underestimates the true sup by O(dx ||f'||_inf).
double amalgam_norm(const SampledFunction& f, double p, const Weight& omega);

/// script-L^p_omega: (int_[0,1) (sum_k |f(x+k)| omega(x+k))^p dx)^{1/p}.
double periodized_norm(const SampledFunction& f, double p, const Weight& omega);

enum class Boundary { Truncate, Periodic };

/// (f *' c)(x) = sum_j c_j f(x - j) on f's grid.  Truncate drops samples
/// shifted outside the window; Periodic wraps them (window = one period).
SampledFunction semi_convolve(const SampledFunction& f, std::span<const cplx> c,
                              int j_min, Boundary boundary = Boundary::Truncate);

/// Continuous convolution (f*g)(x) = int f(y) g(x-y) dy; grids must share dx.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g);

/// Discrete convolution of finitely supported sequences; returns the new j_min.
std::vector<cplx> convolve_sequences(std::span<const cplx> c, int c_min,
                                     std::span<const cplx> d, int d_min,
                                     int* out_min);

/// {int f(x) conj(g(x-j)) dx}_{j=j_min..j_max}, direct summation.
std::vector<cplx> translate_inner_products(const SampledFunction& f,
                                           const SampledFunction& g, int j_min,
                                           int j_max,
                                           Boundary boundary = Boundary::Truncate);

/// int f conj(g) dx over the shared grid.
cplx inner_product(const SampledFunction& f, const SampledFunction& g);

}  // namespace sisframe
