#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "gaborgram/cli/document.hpp"

namespace gabor::cli {

enum class ComplexFormat { kReIm, kMagPhase };

/// Parsed command line. Unset optionals fall back to per-command defaults,
/// and the resolved values are what the manifest records.
struct RunOptions {
  std::string command;
  std::optional<double> a, b;
  std::optional<int> order, n, ell;
  std::optional<std::pair<int, int>> ell_range;
  std::optional<int> grid;
  std::optional<double> tol;
  std::vector<int> n_list;
  std::optional<int> figure;
  Format format = Format::kCsv;
  ComplexFormat complex_format = ComplexFormat::kReIm;
  std::string out;  ///< empty: standard output
  bool stamp = false;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"symbol", "gram",      "block",       "spectrum",
                                              "decay",  "circulant", "framebounds", "figure"};
  return names;
}

/// Runs one command. Throws InvalidArgument on bad parameters and
/// ConvergenceError when a numerical check fails.
Document run_command(const RunOptions& options);

/// "8:64" or "8..64".
std::pair<int, int> parse_ell_range(const std::string& text);

/// 3 for ConvergenceError, 2 for invalid arguments, 1 otherwise.
int exit_code(const std::exception& e) noexcept;

/// Full entry point: parses argv, runs, writes. Returns the process exit code
/// (0 success, 2 invalid parameters, 3 convergence failure).
int run_cli(int argc, char** argv);

}  // namespace gabor::cli
