#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace degbern::cli {

enum class Command { table, verify, limit };
enum class Format { csv, json };

/// Parsed command line.
struct CliConfig {
    Command command = Command::table;
    std::string family;
    std::optional<long> n_max;
    long k = 1;
    std::size_t order = 16;
    /// "symbolic" or a rational literal; verify accepts a comma-separated list.
    std::string lambda = "symbolic";
    std::string x = "0";
    std::string path;
    Format format = Format::csv;
    std::string output;
    // verify only
    long k_min = -2;
    long k_max = 4;
    std::uint64_t budget = 100000;
    std::string inject_fault;
    bool serial = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default truncation order.
inline constexpr const char* kOrderEnv = "DEGBERN_ORDER";

/// Runs the CLI on args (args[0] is the program name). Emits results on out,
/// diagnostics on err, and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degbern::cli
