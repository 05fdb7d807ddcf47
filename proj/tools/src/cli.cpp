#include "cli.hpp"

#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace sisframe::app {

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> indices;
  std::optional<double> epsilon;
  std::optional<std::string> profile;
  bool normalized = false;
  std::optional<int> sign;
  std::optional<int> time_window;
  std::optional<std::string> dx;
  std::optional<int> m;
  std::optional<double> tolerance;
  std::optional<std::string> p_list;
  std::optional<std::string> mu;
  std::optional<int> n_trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  std::vector<std::string> freq_data;
};

void add_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config, "JSON config file; flags override its values");
  app.add_option("--indices", o.indices, "Strictly increasing generator indices, e.g. \"0,1,2\"");
  app.add_option("--epsilon", o.epsilon, "Transition width of the bump, 0 < eps < 1/4");
  app.add_option("--profile", o.profile, "Bump profile: exp or poly");
  app.add_flag("--normalized", o.normalized, "Divide each generator by the partition sum");
  app.add_option("--sign", o.sign, "+1: theta(xi + k pi), -1: theta(xi - k pi)");
  app.add_option("--time-window", o.time_window, "Half width T of the window [-T, T)");
  app.add_option("--dx", o.dx, "Time step as a rational 1/q, e.g. \"1/256\"");
  app.add_option("--m", o.m, "Frequency grid points over [-pi, pi)");
  app.add_option("--tolerance", o.tolerance, "Relative singular value threshold for rank");
  app.add_option("--p-list", o.p_list, "Comma separated p values, e.g. \"1,2,inf\"");
  app.add_option("--mu", o.mu, "Weight: const, poly:s or subexp:alpha:beta");
  app.add_option("--n-trials", o.n_trials, "Random trials for constants and reconstruction");
  app.add_option("--seed", o.seed, "Seed of the trial generator");
  app.add_option("--output-dir", o.output_dir, "Directory for all artifacts");
  app.add_option("--freq-data", o.freq_data,
                 "CSV (xi,re,im) per external generator; replaces --indices");
}

RunConfig resolve(const Overrides& o) {
  RunConfig c;
  if (!o.config.empty()) c = load_config(o.config, c);
  if (o.indices) c.indices = parse_index_list(*o.indices);
  if (o.epsilon) c.epsilon = *o.epsilon;
  if (o.profile) c.profile = parse_profile(*o.profile);
  if (o.normalized) c.normalized = true;
  if (o.sign) c.sign = *o.sign;
  if (o.time_window) c.T = *o.time_window;
  if (o.dx) c.dx = Rational::parse(*o.dx);
  if (o.m) c.m = *o.m;
  if (o.tolerance) c.tolerance = *o.tolerance;
  if (o.p_list) c.p_list = parse_p_list(*o.p_list);
  if (o.mu) c.mu_spec = *o.mu;
  if (o.n_trials) c.n_trials = *o.n_trials;
  if (o.seed) c.seed = *o.seed;
  if (o.output_dir) c.output_dir = *o.output_dir;
  if (!o.freq_data.empty()) c.freq_data.assign(o.freq_data.begin(), o.freq_data.end());
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames of integer translates in weighted shift-invariant spaces", "sisframe"};
  Overrides o;
  add_options(app, o);
  app.require_subcommand(1);
  app.fallthrough();

  using Command = int (*)(const RunConfig&, std::ostream&);
  Command command = nullptr;
  auto sub = [&](const char* name, const char* help, Command fn) {
    app.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
  };
  sub("construct", "Sample the generators and write gen_<k>.csv and meta.json", cmd_construct);
  sub("verdict", "Rank profile and frame verdict (verdict.json)", cmd_verdict);
  sub("dual", "Dual generators, biorthogonality and reconstruction", cmd_dual);
  sub("constants", "Empirical p-frame constants for every p in --p-list", cmd_constants);
  sub("full", "Run every stage and write report.json", cmd_full);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitFrame;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return command(resolve(o), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace sisframe::app
