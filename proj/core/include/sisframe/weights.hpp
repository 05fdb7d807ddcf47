#pragma once

// Weight functions on the real line: constant, polynomial (1+|x|)^s and
// subexponential exp(alpha |x|^beta), plus sampled diagnostics for the
// submultiplicative and moderate inequalities.

#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace sisframe {

enum class WeightKind { Constant, Polynomial, Subexponential };

class Weight {
 public:
  Weight() = default;

  static Weight constant();
  static Weight polynomial(double s);
  static Weight subexponential(double alpha, double beta);

  /// Parses "const", "poly:s" or "subexp:alpha:beta".
  static Weight parse(std::string_view spec);

  /// Inverse of parse(); round-trips through parse().
  std::string to_string() const;

  double operator()(double x) const;

  WeightKind kind() const { return kind_; }
  double exponent() const { return s_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Constant C of mu(x+y) <= C omega(x) mu(y); 1 until calibrated.
  double moderate_constant() const { return moderate_constant_; }
  Weight with_moderate_constant(double c) const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  WeightKind kind_ = WeightKind::Constant;
  double s_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double moderate_constant_ = 1.0;
};

using PointPair = std::pair<double, double>;

inline constexpr double kDefaultWeightSlack = 1e-12;

/// True iff w(x+y) <= (1+slack) w(x) w(y) on every sampled pair.
bool check_submultiplicative(const Weight& w, std::span<const PointPair> pairs,
                             double slack = kDefaultWeightSlack);

/// Smallest C with mu(x+y) <= C omega(x) mu(y) over the sampled pairs.
double check_moderate(const Weight& mu, const Weight& omega,
                      std::span<const PointPair> pairs);

}  // namespace sisframe
