#ifndef HYPERLOC_REPORT_HPP
#define HYPERLOC_REPORT_HPP

#include <optional>
#include <string>

#include "hyperloc/json_io.hpp"

namespace hyperloc {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitUnsupported = 3, kExitSizeBound = 4 };

struct RunConfig {
  std::string command;
  // Arrangement source; exactly one must be set.
  std::optional<std::string> family;
  std::optional<std::string> poly;
  std::optional<std::string> input;

  std::optional<int> r;
  std::optional<int> q;
  std::optional<int> dim;
  int m = 1;
  /// Hyperplane label or 1-based index.
  std::optional<std::string> pivot;
  /// Character: a JSON file path, inline JSON, "trivial", or "Cq" (the
  /// generic point of C_q on D_r, needs r and q).
  std::optional<std::string> character;
  bool oracle = false;
  std::string format = "text";
  std::optional<std::string> out;
  std::size_t max_partition_size = 14;
};

struct Report {
  /// Inputs echo, results and the determinism hash; never timing.
  json data;
  /// Human-readable rendering of the results.
  std::string text;
  double seconds = 0.0;
};

/// Raised for invalid configurations (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Report cmd_lattice(const RunConfig& cfg);
Report cmd_resonance(const RunConfig& cfg);
Report cmd_theorem(const RunConfig& cfg);
Report cmd_sigma_test(const RunConfig& cfg);

/// Dispatches on cfg.command.
Report run_command(const RunConfig& cfg);

/// Maps an exception thrown by a command to its exit code.
int exit_code_for(const std::exception& e);

/// Text rendering plus timing, or the JSON document.
std::string render(const Report& report, const std::string& format);

/// SHA-256 (hex) of the canonical serialization of `data` without its
/// "determinism_hash" member.
std::string determinism_hash(const json& data);

/// Arrangement named by the config's source.
Arrangement load_arrangement(const RunConfig& cfg);

}  // namespace hyperloc

#endif  // HYPERLOC_REPORT_HPP
