#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "commands.hpp"
#include "fixtures.hpp"
#include "sisframe/signal_io.hpp"

using namespace sisframe;
using namespace sisframe::app;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sisframe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("sisframe_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Riesz pair written as external frequency data.
std::vector<std::string> riesz_csv(const fs::path& dir) {
  fs::create_directories(dir);
  const auto gens = sisframe::testing::wide_bump_family(2);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens.generator(i);
    const double step = 1.0 / 512;
    const auto n = static_cast<std::size_t>(std::round((g.support_hi - g.support_lo) / step)) + 1;
    SampledFunction f(Grid{g.support_lo, step, n}, Domain::Frequency);
    for (std::size_t k = 0; k < n; ++k) f.values[k] = g.transform(f.grid.point(k));
    const fs::path p = dir / ("w" + std::to_string(i) + ".csv");
    write_csv(p, f);
    paths.push_back(p.string());
  }
  return paths;
}

bool has_nan_text(const std::string& s) {
  return s.find("NaN") != std::string::npos || s.find("nan") != std::string::npos ||
         s.find("null") != std::string::npos;
}

}  // namespace

TEST(Cli, ConstructWritesGeneratorsAndMeta) {
  const auto dir = scratch("construct");
  const auto r = run({"construct", "--indices", "0,1,2", "--dx", "1/64", "--time-window", "8",
                      "--output-dir", dir.string()});
  ASSERT_EQ(r.code, kExitFrame) << r.err;
  for (const char* f : {"gen_0.csv", "gen_1.csv", "gen_2.csv", "gen_0.bin", "meta.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto meta = nlohmann::json::parse(slurp(dir / "meta.json"));
  EXPECT_EQ(meta["generators"].size(), 3u);
  EXPECT_EQ(meta["config"]["dx"], "1/64");
}

TEST(Cli, InvalidConfigsExitOneAndNameThePrecondition) {
  const auto dir = scratch("invalid");
  auto r = run({"construct", "--epsilon", "0.3", "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("epsilon"), std::string::npos);
  r = run({"construct", "--indices", "2,1", "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("increasing"), std::string::npos);
  r = run({"verdict", "--dx", "3/4", "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitError);
  r = run({"constants", "--mu", "poly:-1", "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("mu"), std::string::npos);
  r = run({"verdict", "--bogus"});
  EXPECT_EQ(r.code, kExitError);
  r = run({});
  EXPECT_EQ(r.code, kExitError);
}

TEST(Cli, VerdictExitCodes) {
  const auto dir = scratch("verdict");
  auto r = run({"verdict", "--indices", "0,1", "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitNotFrame);
  const auto v = nlohmann::json::parse(slurp(dir / "verdict.json"));
  EXPECT_FALSE(v["constant_rank"].get<bool>());
  EXPECT_EQ(v["C_estimate"], "infinite");
  for (const char* key : {"indices", "epsilon", "m", "tolerance", "rank_histogram",
                          "constant_rank", "C_estimate", "min_nonzero_eig", "max_eig"}) {
    EXPECT_TRUE(v.contains(key)) << key;
  }

  const auto data = riesz_csv(dir / "data");
  r = run({"verdict", "--freq-data", data[0], data[1], "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitFrame) << r.err;
}

TEST(Cli, ConfigFileWithFlagOverrides) {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"indices": [0, 1], "epsilon": 0.1, "dx": "1/32", "T": 8,
                           "p_list": [1, "inf"], "mu": "poly:2", "seed": 9})";
  const RunConfig c = load_config(cfg);
  EXPECT_EQ(c.indices, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.dx, (Rational{1, 32}));
  EXPECT_EQ(c.p_list.size(), 2u);
  EXPECT_TRUE(std::isinf(c.p_list[1]));

  const auto r = run({"verdict", "--config", cfg.string(), "--indices", "0,2,5", "--output-dir",
                      dir.string()});
  EXPECT_NE(r.code, kExitError) << r.err;
  const auto v = nlohmann::json::parse(slurp(dir / "verdict.json"));
  EXPECT_EQ(v["indices"], nlohmann::json::parse("[0,2,5]"));
  EXPECT_DOUBLE_EQ(v["epsilon"].get<double>(), 0.1);

  std::ofstream(cfg) << R"({"indices": [0], "colour": "blue"})";
  EXPECT_THROW(load_config(cfg), std::invalid_argument);
}

TEST(Cli, FullOnNonFrameMarksSkippedSections) {
  const auto dir = scratch("full_skip");
  const auto r = run({"full", "--indices", "0,1", "--dx", "1/32", "--time-window", "8",
                      "--output-dir", dir.string()});
  EXPECT_EQ(r.code, kExitNotFrame);
  const auto text = slurp(dir / "report.json");
  const auto rep = nlohmann::json::parse(text);
  EXPECT_EQ(rep["dual"], "skipped: not a frame");
  EXPECT_EQ(rep["constants"], "skipped: not a frame");
  EXPECT_FALSE(has_nan_text(text));
}

TEST(Cli, FullOnFrameIsDeterministicAndComplete) {
  const auto base = scratch("full");
  const auto data = riesz_csv(base / "data");
  std::string reports[2];
  for (int run_id = 0; run_id < 2; ++run_id) {
    const auto dir = base / ("run" + std::to_string(run_id));
    const auto r = run({"full", "--freq-data", data[0], data[1], "--dx", "1/64", "--time-window",
                        "16", "--n-trials", "10", "--seed", "3", "--p-list", "1,2,inf",
                        "--output-dir", dir.string()});
    ASSERT_EQ(r.code, kExitFrame) << r.err;
    reports[run_id] = slurp(dir / "report.json");
    EXPECT_TRUE(fs::exists(dir / "psi_0.csv"));
    EXPECT_TRUE(fs::exists(dir / "ratios.csv"));
  }
  EXPECT_EQ(reports[0], reports[1]);
  EXPECT_FALSE(has_nan_text(reports[0]));
  const auto rep = nlohmann::json::parse(reports[0]);
  ASSERT_EQ(rep["constants"].size(), 3u);
  EXPECT_LT(rep["dual"]["recon_error_max"].get<double>(), 1e-6);
  for (const auto& block : rep["constants"]) {
    for (const char* key : {"indices", "p", "mu", "n_trials", "seed", "lower", "upper",
                            "recon_error_max", "biorth_max_offdiag"}) {
      EXPECT_TRUE(block.contains(key)) << key;
    }
  }
}

TEST(Report, NumberMarkers) {
  EXPECT_EQ(number(kInfinity), "infinite");
  EXPECT_EQ(number(-kInfinity), "-infinite");
  EXPECT_EQ(number(std::nan("")), "undefined");
  EXPECT_EQ(number(1.5), 1.5);
}
