#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opdisk/io.hpp"

namespace opdisk {

/// Configuration of a verification run.
struct RunConfig {
  Index dim = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  double norm_cap = 0.9;
  bool allow_nonunique = false;
  Tolerances tol;

  /// Throws ConfigError unless 1 <= dim <= 64, samples >= 1, 0 < norm_cap < 1
  /// and the tolerances lie in (0, 1).
  void validate() const;
};

/// Outcome of a command; serializes to the report JSON emitted by the CLI.
/// Two runs with identical inputs produce byte-identical JSON except for
/// elapsed_ms.
struct Report {
  std::string command;
  Json inputs;
  Json outputs;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double elapsed_ms = 0.0;

  Json to_json() const;
  bool passed(const Tolerances& tol) const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs `cfg.samples` independent random instances of the named suite, one
/// PRNG stream per instance index.  Instances may execute in parallel
/// (bounded by OPDISK_THREADS); residuals are merged by index, so the report
/// is deterministic for a fixed config.  On failure the report carries the
/// offending instance serialized for reproduction.
Report run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace opdisk
