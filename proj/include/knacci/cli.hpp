#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace knacci::cli {

enum class OutputFormat { plain, json, csv };

struct CliConfig {
  unsigned precision = 50;  // >= 15
  OutputFormat output = OutputFormat::plain;
  std::uint64_t seed = 20150303;
};

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knacci::cli
