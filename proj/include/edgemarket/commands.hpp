#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace edgemarket {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNumerical = 3;

/// Command-line values layered over the config file; unset fields keep the
/// file's (or default) values.
struct CommandOverrides {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::size_t> users;
    std::optional<std::size_t> servers;
    std::optional<std::string> output_path;
    std::optional<std::string> format;
    std::optional<int> fit_degree;
};

/// Runs one market round at the configured (N, M); writes the result file
/// and prints W. Returns an exit code (0 ok, 1 validation, 2 I/O,
/// 3 numerical).
int cmd_simulate(const CommandOverrides& overrides, std::ostream& out, std::ostream& err);

/// Runs the server-count sweep, fit, and optimum extraction; writes the
/// result file and prints M* and the server-user ratio.
int cmd_sweep(const CommandOverrides& overrides, std::ostream& out, std::ostream& err);

/// Prints a plot-ready table for a sweep result file: the (M, mean W) data
/// rows followed by 200 samples of the fitted curve.
int cmd_report(const std::string& result_path, std::ostream& out, std::ostream& err);

}  // namespace edgemarket
