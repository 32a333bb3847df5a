#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "affbraid/loop_tracer.hpp"

namespace affbraid::cli {

/// Settings every subcommand draws from.  Resolution order: built-in
/// defaults, then the optional config file, then per-trajectory-file
/// tolerance overrides, then command line flags.
struct RunConfig {
  Tolerances tolerances;
  double direction = 0.0;
  int subdivision_depth = 32;
  int summit_cap = 100000;
  std::string format = "text";  // "text" or "structured"

  /// Rejects impossible settings (non-positive tolerances, zero limits).
  void validate() const;
};

/// Parses a JSON config document with optional members eps_sep, eps_rank,
/// eps_close, direction, subdivision_depth, summit_cap, format.  Unknown
/// members are rejected so typos never silently revert to defaults.
RunConfig parse_config(const std::string& json_text);

/// The whole command line program, callable in process.  Verdicts go to
/// `out`, warnings and error explanations to `err`, `in` backs the "-"
/// input file.  Returns the exit status: 0 when a result was rendered
/// (including negative verdicts), 2 for unusable input, 3 for resource
/// limits, 4 for tracing failures.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace affbraid::cli
