#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "sisframe/dual.hpp"

namespace sisframe::app {

inline constexpr int kExitFrame = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFrame = 2;

/// Finite numbers pass through; +-inf become "infinite" / "-infinite" and
/// NaN becomes "undefined", so reports never carry NaN.
nlohmann::json number(double x);

/// Bump family from the config, or the external frequency data if given,
/// sampled on the config's time grid.
GeneratorSet make_generators(const RunConfig& config);

nlohmann::json verdict_json(const RunConfig& config, const GeneratorSet& gens,
                            const FrameVerdict& verdict);

/// Serialized with a trailing newline and 2-space indent.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

// Each command validates the config, writes its artifacts under
// config.output_dir and returns the process exit code.  Progress lines go to
// `log`.
int cmd_construct(const RunConfig& config, std::ostream& log);
int cmd_verdict(const RunConfig& config, std::ostream& log);
int cmd_dual(const RunConfig& config, std::ostream& log);
int cmd_constants(const RunConfig& config, std::ostream& log);
int cmd_full(const RunConfig& config, std::ostream& log);

}  // namespace sisframe::app
