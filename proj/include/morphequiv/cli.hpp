#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morphequiv::cli {

enum class Format { text, json };

inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input_error = 2;

struct RunConfig {
  std::string verb;
  std::vector<std::string> inputs;
  std::optional<double> tol_rank;
  std::optional<double> tol_psd;
  std::uint64_t seed = 0;
  Format format = Format::text;
  /// Report destination; the report is also returned in RunResult.
  std::optional<std::string> out;
};

struct RunResult {
  int exit_code = exit_input_error;
  std::string report;
  /// Message for input errors, empty otherwise.
  std::string error;
};

/// validate, equiv, classes, orbit-check, preord-check, frame, bridge
const std::vector<std::string>& verbs();

/// Runs one verb over every input. Exit code: 0 if every verdict is
/// true/valid, 1 if some verdict is false, 2 on any input error (in which
/// case the report describes the error). Reports depend only on the input
/// bytes, the input file names and the config.
RunResult run(const std::string& verb, const RunConfig& cfg);
inline RunResult run(const RunConfig& cfg) { return run(cfg.verb, cfg); }

}  // namespace morphequiv::cli
