#pragma once

// Subcommands of the algser tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "algser/errors.hpp"

namespace algser::cli {

enum class OutputFormat { Text, Csv, Json };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // overflow, root finding, I/O while writing
inline constexpr int kInsufficientInput = 2;
inline constexpr int kSingularSystem = 3;
inline constexpr int kZeroDenominator = 4;
inline constexpr int kUsage = 5;
}  // namespace exit_code

int exit_code_for(ErrorKind kind) noexcept;

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  int N = 0;  // 0: infer from degrees
  std::vector<int> degrees;
  std::size_t predict = 6;
  std::optional<std::filesystem::path> truth;
  int digits = 6;  // decimals for text tables
  OutputFormat format = OutputFormat::Text;
  std::string example;
  std::size_t count = 0;
};

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace algser::cli
