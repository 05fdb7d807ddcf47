#include "sisframe/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sisframe {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  std::string buf(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != buf.size() || !std::isfinite(value)) {
    throw std::invalid_argument("weight: cannot parse " + std::string(what) +
                                " from '" + buf + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Weight Weight::constant() { return Weight{}; }

Weight Weight::polynomial(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("polynomial weight requires s >= 0");
  }
  Weight w;
  w.kind_ = WeightKind::Polynomial;
  w.s_ = s;
  return w;
}

Weight Weight::subexponential(double alpha, double beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("subexponential weight requires alpha > 0");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("subexponential weight requires 0 < beta < 1");
  }
  Weight w;
  w.kind_ = WeightKind::Subexponential;
  w.alpha_ = alpha;
  w.beta_ = beta;
  return w;
}

Weight Weight::parse(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "const" && parts.size() == 1) return constant();
  if (parts[0] == "poly" && parts.size() == 2) {
    return polynomial(parse_double(parts[1], "s"));
  }
  if (parts[0] == "subexp" && parts.size() == 3) {
    return subexponential(parse_double(parts[1], "alpha"),
                          parse_double(parts[2], "beta"));
  }
  throw std::invalid_argument("unknown weight spec '" + std::string(spec) +
                              "' (expected const, poly:s or subexp:alpha:beta)");
}

std::string Weight::to_string() const {
  switch (kind_) {
    case WeightKind::Constant:
      return "const";
    case WeightKind::Polynomial:
      return "poly:" + format_double(s_);
    case WeightKind::Subexponential:
      return "subexp:" + format_double(alpha_) + ":" + format_double(beta_);
  }
  return "const";
}

double Weight::operator()(double x) const {
  const double ax = std::abs(x);
  switch (kind_) {
    case WeightKind::Constant:
      return 1.0;
    case WeightKind::Polynomial:
      return s_ == 0.0 ? 1.0 : std::pow(1.0 + ax, s_);
    case WeightKind::Subexponential:
      return std::exp(alpha_ * std::pow(ax, beta_));
  }
  return 1.0;
}

Weight Weight::with_moderate_constant(double c) const {
  if (!(c >= 1.0) || !std::isfinite(c)) {
    throw std::invalid_argument("moderate constant must be finite and >= 1");
  }
  Weight w = *this;
  w.moderate_constant_ = c;
  return w;
}

bool check_submultiplicative(const Weight& w, std::span<const PointPair> pairs,
                             double slack) {
  if (pairs.empty()) {
    throw std::invalid_argument("check_submultiplicative: empty sample");
  }
  return std::all_of(pairs.begin(), pairs.end(), [&](const PointPair& p) {
    return w(p.first + p.second) <= (1.0 + slack) * w(p.first) * w(p.second);
  });
}

double check_moderate(const Weight& mu, const Weight& omega,
                      std::span<const PointPair> pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("check_moderate: empty sample");
  }
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    worst = std::max(worst, mu(x + y) / (omega(x) * mu(y)));
  }
  return worst;
}

}  // namespace sisframe
