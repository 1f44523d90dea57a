#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace dynfield::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kAccept = 0,
  kReject = 1,
  kBudgetExhausted = 2,
  kInvalidInput = 3,
  kInconsistentMacrostate = 4,
};

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::size_t steps = 100;
  std::optional<std::uint32_t> grid;
  bool svg = false;
  std::filesystem::path out = ".";
  std::string format = "table";  // json | table
  std::optional<std::string> stack;
  std::string tape;
  bool binary = false;  // density snapshots as float64 instead of JSON
  std::optional<double> u0;
  double dt = 0.1;
};

int cmd_parse(const RunConfig& cfg, std::ostream& out);
int cmd_compile(const RunConfig& cfg, std::ostream& out);
int cmd_dfa(const RunConfig& cfg, std::ostream& out);
int cmd_grid(const RunConfig& cfg, std::ostream& out);
int cmd_stability(const RunConfig& cfg, std::ostream& out);
int cmd_render(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command and maps library errors onto exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dynfield::cli
