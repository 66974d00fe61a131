#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "cli/json_io.hpp"

namespace cartan::cli {

struct RunConfig {
  std::string subcommand;
  std::string model = "projective";  // flat-symmetries
  int m = 2;                         // flat-symmetries, example-nonhomog
  int p = 2;
  int q = 1;
  std::string system_path;   // check-system, invariant-weyl
  std::string cochain_path;  // normality-check
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string output;  // empty means stdout
};

struct RunResult {
  int exit_code = 0;  // 0 verified, 1 violation reported, 2 usage or input error
  json document;
};

RunResult run(const RunConfig& config);

/// Parsed configuration, or the exit code to return immediately (help
/// output or a usage error already printed).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv);

/// Serialized form written by the tool (two-space indent, sorted keys).
std::string render(const json& document);

}  // namespace cartan::cli
