#pragma once

// Command-line front end. Exit codes: 0 success with every check passing,
// 1 a verification or audit check failed (or a search disagreed with the
// closed form), 2 usage or parse error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xsperner/search.hpp"

namespace xsperner::cli {

enum class Command { verify, intersect, construct, search, audit, report };
enum class OutputFormat { text, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::search;
  int n = 0;
  PruningLevel pruning = PruningLevel::none;
  unsigned workers = 0;  // 0 = available parallelism
  OutputFormat format = OutputFormat::text;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> input_path;
  std::optional<std::filesystem::path> output_path;

  bool witnesses = false;                  // search
  std::vector<int> x_elements;             // construct
  std::string claim = "all";               // audit
  std::optional<std::uint64_t> samples;    // audit
  int n_max = 0;                           // report
};

/// Executes a parsed configuration. Reports go to `out` (or the output
/// path), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xsperner::cli
