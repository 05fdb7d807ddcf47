#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "sisframe/signal_io.hpp"

namespace sisframe::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSkipped = "skipped: not a frame";

json histogram_json(const std::map<int, int>& h) {
  json j = json::object();
  for (const auto& [rank, count] : h) j[std::to_string(rank)] = count;
  return j;
}

void prepare_output(const RunConfig& config) { fs::create_directories(config.output_dir); }

json meta_json(const RunConfig& config, const GeneratorSet& gens) {
  json j;
  j["config"] = to_json(config);
  const Grid& g = gens.time_grid();
  j["time_grid"] = {{"x0", number(g.x0)}, {"dx", config.dx.to_string()}, {"n", g.n}};
  j["generators"] = json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& gen = gens.generator(i);
    const auto& d = gens.diagnostics()[i];
    j["generators"].push_back({{"label", gen.label},
                               {"support", {number(gen.support_lo), number(gen.support_hi)}},
                               {"amalgam_norm_w1", number(d.amalgam_norm)},
                               {"decay_constant", number(d.decay_constant)},
                               {"peak_magnitude", number(d.peak_magnitude)},
                               {"truncation_tail", number(d.edge_magnitude)}});
  }
  return j;
}

void write_generators(const RunConfig& config, const GeneratorSet& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string& label = gens.generator(i).label;
    write_csv(config.output_dir / ("gen_" + label + ".csv"), gens.time()[i]);
    write_binary(config.output_dir / ("gen_" + label + ".bin"), gens.time()[i]);
  }
  write_json(config.output_dir / "meta.json", meta_json(config, gens));
}

struct DualResults {
  DualSet duals;
  ReconstructionReport recon;
  double biorth_max_offdiag = 0.0;
  double biorth_max_deviation = 0.0;
};

DualResults run_dual(const RunConfig& config, const GeneratorSet& gens) {
  DualOptions options;
  options.m = config.m;
  options.tolerance = config.tolerance;
  DualResults r{build_dual(gens, options), {}, 0.0, 0.0};
  const CMatrix b = biorthogonality_matrix(gens, r.duals);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (i != k) r.biorth_max_offdiag = std::max(r.biorth_max_offdiag, std::abs(b(i, k)));
    }
  }
  r.biorth_max_deviation = max_identity_deviation(b);
  r.recon = reconstruction_test(gens, r.duals, config.n_trials, config.seed);
  return r;
}

double recon_max(const ReconstructionReport& r) {
  return std::max(r.max_error, r.max_error_symmetric);
}

json dual_json(const RunConfig& config, const GeneratorSet& gens, const DualResults& r) {
  json j;
  j["indices"] = config.indices;
  j["n_trials"] = config.n_trials;
  j["seed"] = config.seed;
  j["eigen_cutoff"] = number(r.duals.eigen_cutoff);
  j["biorth_max_offdiag"] = number(r.biorth_max_offdiag);
  j["biorth_max_deviation"] = number(r.biorth_max_deviation);
  j["recon_error_max"] = number(recon_max(r.recon));
  j["recon_error_analysis_by_dual"] = number(r.recon.max_error);
  j["recon_error_analysis_by_generators"] = number(r.recon.max_error_symmetric);
  j["dual_amalgam_norms"] = json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    j["dual_amalgam_norms"].push_back(
        {{"label", r.duals.fourier[i].label}, {"w1_norm", number(r.duals.amalgam_norms[i])}});
  }
  return j;
}

void write_duals(const RunConfig& config, const GeneratorSet& gens, const DualSet& duals) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    write_csv(config.output_dir / ("psi_" + gens.generator(i).label + ".csv"), duals.time[i]);
  }
}

json constants_json(const RunConfig& config, const GeneratorSet& gens, const DualResults& dual,
                    std::vector<FrameConstants>& blocks_out) {
  const Weight mu = config.mu();
  PFrameOptions options;
  options.duals = &dual.duals;
  options.tolerance = config.tolerance;
  json blocks = json::array();
  for (double p : config.p_list) {
    auto fc = pframe_constants(gens, p, mu, config.n_trials, config.seed, options);
    json b;
    b["indices"] = config.indices;
    b["p"] = p_to_string(p);
    b["mu"] = mu.to_string();
    b["n_trials"] = fc.n_trials;
    b["seed"] = fc.seed;
    b["lower"] = number(fc.lower);
    b["upper"] = number(fc.upper);
    b["dual_lower"] = number(fc.dual_lower.value_or(kInfinity));
    b["dual_upper"] = number(fc.dual_upper.value_or(kInfinity));
    b["recon_error_max"] = number(recon_max(dual.recon));
    b["biorth_max_offdiag"] = number(dual.biorth_max_offdiag);
    blocks.push_back(std::move(b));
    blocks_out.push_back(std::move(fc));
  }
  return blocks;
}

void write_ratios(const fs::path& path, const std::vector<FrameConstants>& blocks) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "p,mu,trial,ratio\n";
  char buf[64];
  for (const auto& fc : blocks) {
    for (std::size_t t = 0; t < fc.ratios.size(); ++t) {
      std::snprintf(buf, sizeof buf, "%.17g", fc.ratios[t]);
      out << p_to_string(fc.p) << ',' << fc.mu.to_string() << ',' << t << ',' << buf << '\n';
    }
  }
}

void log_verdict(std::ostream& log, const FrameVerdict& v) {
  log << "verdict: " << (v.positive() ? "frame" : "not a frame") << ", rank "
      << v.rank_min;
  if (v.rank_max != v.rank_min) log << ".." << v.rank_max;
  log << " over " << v.m << " points\n";
}

}  // namespace

json number(double x) {
  if (std::isnan(x)) return "undefined";
  if (std::isinf(x)) return x > 0 ? "infinite" : "-infinite";
  return x;
}

GeneratorSet make_generators(const RunConfig& config) {
  if (config.freq_data.empty()) {
    return build_generators(config.indices, config.bump_spec(), config.time_grid());
  }
  std::vector<FourierGenerator> gens;
  for (std::size_t i = 0; i < config.freq_data.size(); ++i) {
    const auto data = read_csv(config.freq_data[i], Domain::Frequency);
    gens.push_back(sampled_generator(std::to_string(i), data));
  }
  auto set = GeneratorSet::from_fourier(std::move(gens));
  set.synthesize(config.time_grid());
  return set;
}

json verdict_json(const RunConfig& config, const GeneratorSet& gens, const FrameVerdict& v) {
  json j;
  j["indices"] = config.indices;
  j["epsilon"] = config.epsilon;
  j["m"] = v.m;
  j["tolerance"] = v.tolerance;
  j["rank_histogram"] = histogram_json(v.rank_histogram);
  j["constant_rank"] = v.constant_rank;
  j["C_estimate"] = number(v.c_estimate);
  j["min_nonzero_eig"] = number(v.min_nonzero_eig);
  j["max_eig"] = number(v.max_eig);
  j["rank_min"] = v.rank_min;
  j["rank_max"] = v.rank_max;
  j["frame"] = v.positive();
  j["transitions"] = json::array();
  for (double t : v.transitions) j["transitions"].push_back(number(t));
  if (config.freq_data.empty()) j["index_set_case"] = index_set_case(config.indices);
  j["generators"] = json::array();
  for (const auto& g : gens.generators()) j["generators"].push_back(g.label);
  return j;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

int cmd_construct(const RunConfig& config, std::ostream& log) {
  validate(config);
  prepare_output(config);
  const auto gens = make_generators(config);
  write_generators(config, gens);
  log << "wrote " << gens.size() << " generators to " << config.output_dir.string() << '\n';
  return kExitFrame;
}

int cmd_verdict(const RunConfig& config, std::ostream& log) {
  validate(config);
  prepare_output(config);
  const auto gens = make_generators(config);
  const auto v = frame_verdict(gens, config.m, config.tolerance);
  write_json(config.output_dir / "verdict.json", verdict_json(config, gens, v));
  log_verdict(log, v);
  return v.positive() ? kExitFrame : kExitNotFrame;
}

int cmd_dual(const RunConfig& config, std::ostream& log) {
  validate(config);
  prepare_output(config);
  const auto gens = make_generators(config);
  const auto v = frame_verdict(gens, config.m, config.tolerance);
  write_json(config.output_dir / "verdict.json", verdict_json(config, gens, v));
  log_verdict(log, v);
  if (!v.positive()) {
    write_json(config.output_dir / "dual.json", json{{"status", kSkipped}});
    return kExitNotFrame;
  }
  const auto r = run_dual(config, gens);
  write_duals(config, gens, r.duals);
  write_json(config.output_dir / "dual.json", dual_json(config, gens, r));
  return kExitFrame;
}

int cmd_constants(const RunConfig& config, std::ostream& log) {
  validate(config);
  prepare_output(config);
  const auto gens = make_generators(config);
  const auto v = frame_verdict(gens, config.m, config.tolerance);
  log_verdict(log, v);
  if (!v.positive()) {
    write_json(config.output_dir / "constants.json", json{{"status", kSkipped}});
    return kExitNotFrame;
  }
  const auto r = run_dual(config, gens);
  std::vector<FrameConstants> blocks;
  write_json(config.output_dir / "constants.json", constants_json(config, gens, r, blocks));
  write_ratios(config.output_dir / "ratios.csv", blocks);
  return kExitFrame;
}

int cmd_full(const RunConfig& config, std::ostream& log) {
  validate(config);
  prepare_output(config);
  const auto gens = make_generators(config);
  write_generators(config, gens);
  const auto v = frame_verdict(gens, config.m, config.tolerance);
  const json verdict = verdict_json(config, gens, v);
  write_json(config.output_dir / "verdict.json", verdict);
  log_verdict(log, v);

  json report;
  report["config"] = to_json(config);
  report["verdict"] = verdict;
  if (!v.positive()) {
    report["dual"] = kSkipped;
    report["constants"] = kSkipped;
    write_json(config.output_dir / "report.json", report);
    return kExitNotFrame;
  }
  const auto r = run_dual(config, gens);
  write_duals(config, gens, r.duals);
  report["dual"] = dual_json(config, gens, r);
  std::vector<FrameConstants> blocks;
  report["constants"] = constants_json(config, gens, r, blocks);
  write_ratios(config.output_dir / "ratios.csv", blocks);
  write_json(config.output_dir / "report.json", report);
  return kExitFrame;
}

}  // namespace sisframe::app
