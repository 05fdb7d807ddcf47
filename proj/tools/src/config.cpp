#include "config.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sisframe::app {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
  }
  return parts;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

double p_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_p(v.get<std::string>());
  if (v.is_number()) return v.get<double>();
  throw std::invalid_argument("p_list entries must be numbers or \"inf\"");
}

}  // namespace

BumpSpec RunConfig::bump_spec() const {
  BumpSpec s;
  s.epsilon = epsilon;
  s.normalized = normalized;
  s.profile = profile;
  s.sign = sign;
  return s;
}

Grid RunConfig::time_grid() const { return Grid::time_window(T, dx); }

Weight RunConfig::mu() const { return Weight::parse(mu_spec); }

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size()) throw std::invalid_argument("bad p value '" + text + "'");
  return v;
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_p(part));
  return out;
}

std::string p_to_string(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

void validate(const RunConfig& c) {
  if (c.freq_data.empty()) {
    if (c.indices.empty()) throw std::invalid_argument("indices: at least one index is required");
    for (std::size_t i = 1; i < c.indices.size(); ++i) {
      if (c.indices[i] <= c.indices[i - 1]) {
        throw std::invalid_argument("indices: must be strictly increasing");
      }
    }
  }
  if (!(c.epsilon > 0.0 && c.epsilon < 0.25)) {
    throw std::invalid_argument("epsilon: must satisfy 0 < epsilon < 1/4");
  }
  if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("sign: must be +1 or -1");
  if (c.dx.num != 1 || c.dx.den <= 0) {
    throw std::invalid_argument("dx: must be 1/q with q a positive integer");
  }
  if (c.T <= 0) throw std::invalid_argument("time_window: T must be a positive integer");
  if (c.m < 64) throw std::invalid_argument("m: need at least 64 grid points");
  if (!(c.tolerance > 0.0 && c.tolerance < 1.0)) {
    throw std::invalid_argument("tolerance: must lie in (0, 1)");
  }
  if (c.p_list.empty()) throw std::invalid_argument("p_list: at least one p is required");
  for (double p : c.p_list) {
    if (!(p >= 1.0)) throw std::invalid_argument("p_list: every p must be >= 1 or inf");
  }
  try {
    (void)c.mu();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("mu: ") + e.what());
  }
  if (c.n_trials < 10) throw std::invalid_argument("n_trials: must be >= 10");
  if (c.output_dir.empty()) throw std::invalid_argument("output_dir: must not be empty");
  // The bump spectra must sit inside the Nyquist band of the time grid.
  if (c.freq_data.empty()) {
    const int k_max = std::max(std::abs(c.indices.front()), std::abs(c.indices.back()));
    const double band = std::numbers::pi * static_cast<double>(c.dx.den);
    if (std::numbers::pi * (k_max + 1) >= band) {
      throw std::invalid_argument("dx: too coarse for the largest index (Nyquist band)");
    }
  }
}

RunConfig merge_json(RunConfig c, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "indices") {
      c.indices = v.is_string() ? parse_index_list(v.get<std::string>())
                                : v.get<std::vector<int>>();
    } else if (key == "epsilon") {
      c.epsilon = v.get<double>();
    } else if (key == "profile") {
      c.profile = parse_profile(v.get<std::string>());
    } else if (key == "normalized") {
      c.normalized = v.get<bool>();
    } else if (key == "sign") {
      c.sign = v.get<int>();
    } else if (key == "dx") {
      c.dx = Rational::parse(v.get<std::string>());
    } else if (key == "T" || key == "time_window") {
      c.T = v.get<int>();
    } else if (key == "m") {
      c.m = v.get<int>();
    } else if (key == "tolerance") {
      c.tolerance = v.get<double>();
    } else if (key == "p_list") {
      c.p_list.clear();
      for (const auto& p : v) c.p_list.push_back(p_from_json(p));
    } else if (key == "mu" || key == "mu_spec") {
      c.mu_spec = v.get<std::string>();
    } else if (key == "n_trials") {
      c.n_trials = v.get<int>();
    } else if (key == "seed") {
      c.seed = v.get<std::uint64_t>();
    } else if (key == "output_dir") {
      c.output_dir = v.get<std::string>();
    } else if (key == "freq_data") {
      c.freq_data.clear();
      for (const auto& p : v) c.freq_data.emplace_back(p.get<std::string>());
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config: " + std::string(e.what()));
  }
  return merge_json(std::move(base), j);
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["indices"] = c.indices;
  j["epsilon"] = c.epsilon;
  j["profile"] = to_string(c.profile);
  j["normalized"] = c.normalized;
  j["sign"] = c.sign;
  j["dx"] = c.dx.to_string();
  j["T"] = c.T;
  j["m"] = c.m;
  j["tolerance"] = c.tolerance;
  j["p_list"] = nlohmann::json::array();
  for (double p : c.p_list) j["p_list"].push_back(p_to_string(p));
  j["mu"] = c.mu_spec;
  j["n_trials"] = c.n_trials;
  j["seed"] = c.seed;
  if (!c.freq_data.empty()) {
    j["freq_data"] = nlohmann::json::array();
    for (const auto& p : c.freq_data) j["freq_data"].push_back(p.generic_string());
  }
  return j;
}

}  // namespace sisframe::app
