#pragma once

// Reference generator families shared by unit and acceptance tests.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sisframe/generators.hpp"

namespace sisframe::testing {

inline constexpr double kPi = std::numbers::pi;

/// w = 1 on [-pi+eps, pi-eps], smooth descent to 0 at +-(pi+eps), so the
/// periodized vectors of w(. + 2 pi k), k = 0..r-1, stay independent at
/// every xi: a Riesz family of rank r.
inline GeneratorSet wide_bump_family(int r, double eps = 0.2) {
  const Bump bump(BumpSpec{eps, false, BumpProfile::Exp, 1});
  std::vector<FourierGenerator> gens;
  for (int k = 0; k < r; ++k) {
    const double shift = 2.0 * kPi * k;
    FourierGenerator g;
    g.label = "w" + std::to_string(k);
    g.support_lo = -kPi - eps - shift;
    g.support_hi = kPi + eps - shift;
    g.transform = [bump, eps, shift](double xi) {
      const double a = std::abs(xi + shift);
      if (a <= kPi - eps) return cplx(1.0);
      if (a >= kPi + eps) return cplx{};
      return cplx(bump.step((kPi + eps - a) / (2.0 * eps)));
    };
    gens.push_back(std::move(g));
  }
  return GeneratorSet::from_fourier(std::move(gens));
}

inline std::vector<int> range_indices(int first, int last) {
  std::vector<int> v;
  for (int k = first; k <= last; ++k) v.push_back(k);
  return v;
}

}  // namespace sisframe::testing
