#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sisframe::acceptance {

struct InequalityResult {
  std::string name;
  int instances = 0;
  int held = 0;           // lhs <= rhs * (1 + slack)
  double max_ratio = 0.0; // max lhs / rhs
  std::string worst;      // description of the worst instance
};

/// Random (f, c, p, mu) instances for each weighted norm inequality.  One
/// instance distribution is shared by all of them: f is white complex noise
/// on 1..max_cells unit cells at a random integer offset, c is complex noise on
/// 1..5 consecutive integers, g is a modulated bump generator.
std::vector<InequalityResult> run_inequality_suite(std::uint64_t seed, int instances,
                                                   double slack, int max_cells = 4);

}  // namespace sisframe::acceptance
