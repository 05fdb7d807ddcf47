#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sisframe/generators.hpp"
#include "sisframe/signal.hpp"
#include "sisframe/weights.hpp"

namespace sisframe::app {

struct RunConfig {
  std::vector<int> indices{0, 1, 2};
  double epsilon = 0.2;
  BumpProfile profile = BumpProfile::Exp;
  bool normalized = false;
  int sign = +1;
  Rational dx{1, 256};
  int T = 32;
  int m = 1024;
  double tolerance = 1e-8;
  std::vector<double> p_list{1.0, 2.0, kInfinity};
  std::string mu_spec = "const";
  int n_trials = 50;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "sisframe_out";
  /// Optional external generators: one CSV of (xi, re, im) per generator.
  /// When present they replace the bump family built from `indices`.
  std::vector<std::filesystem::path> freq_data;

  BumpSpec bump_spec() const;
  Grid time_grid() const;
  Weight mu() const;
};

/// Throws std::invalid_argument naming the first violated precondition.
void validate(const RunConfig& config);

/// Keys match the field names; unknown keys are rejected.
RunConfig merge_json(RunConfig base, const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Every field except output_dir, so reports do not depend on where they land.
nlohmann::json to_json(const RunConfig& config);

std::vector<int> parse_index_list(const std::string& text);
std::vector<double> parse_p_list(const std::string& text);
double parse_p(const std::string& text);
std::string p_to_string(double p);

}  // namespace sisframe::app
