#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace nprox {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitCheckFailed = 2 };

/// Runs one subcommand (points, ortho, project, converge, cylinder, polya,
/// gelfond, rho, density) and writes <out>/<name>.csv and <out>/<name>.json.
/// With check set, verification failures return kExitCheckFailed. Messages
/// go to `log`.
int run_subcommand(const std::string& name, const nlohmann::json& config, const std::filesystem::path& out, bool check,
                   std::ostream& log);

}  // namespace nprox
