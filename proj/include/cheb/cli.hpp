#pragma once

// Command-line front end.  All machine-readable output (csv/json) is
// deterministic: fixed field order, fixed 17-significant-digit directed
// decimal endpoints, no timestamps, no locale dependence.

#include <string>
#include <vector>

#include "cheb/interval.hpp"

namespace cheb {

enum class OutputFormat { kCsv, kJson, kText };

// Runtime configuration.  May be seeded from a plain `key = value` file;
// command-line flags override file values.
struct CliConfig {
  Prec precision_bits = kDefaultPrec;
  std::string cache_dir;             // empty: no result caching
  std::string zeros_path;            // required by the `zeros` command
  OutputFormat output_format = OutputFormat::kText;
  unsigned long long sieve_budget = 100000000ULL;
  int threads = 1;                   // worker threads for zero-sum evaluation
};

// Parses a `key = value` config file into `cfg`.  Lines starting with '#'
// and blank lines are ignored.  Unknown keys or malformed lines raise
// ParseError with the offending line number.
void load_config_file(const std::string& path, CliConfig& cfg);

OutputFormat parse_output_format(const std::string& name);

// Process exit codes (stable public contract):
//   0  success
//   2  usage error (bad flags, missing required arguments, bad format name)
//   3  requested item not found (e.g. unknown audit id)
//   4  domain/threshold/region violation (input outside proven validity)
//   5  I/O failure (unreadable file, malformed data file)
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotFound = 3;
inline constexpr int kExitDomain = 4;
inline constexpr int kExitIo = 5;

// Entry point used by main(); returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace cheb
