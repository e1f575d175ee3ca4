#pragma once

#include <string>
#include <vector>

#include "worm3/config.hpp"
#include "worm3/exec.hpp"

namespace worm3 {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitCertifyFail = 2,
  kExitConfigError = 3,
  kExitNonConvergent = 4,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;  // written, in order
  std::string message;
};

CommandResult run_certify(const RunConfig& cfg, const std::string& out_dir, Exec exec = Exec::parallel);
CommandResult run_select(const RunConfig& cfg, const std::string& out_dir, Exec exec = Exec::parallel);
CommandResult run_kernel(const RunConfig& cfg, const std::string& out_dir, Exec exec = Exec::parallel);
CommandResult run_norms(const RunConfig& cfg, const std::string& out_dir, Exec exec = Exec::parallel);
CommandResult run_nebenhulle(const RunConfig& cfg, const std::string& out_dir,
                             Exec exec = Exec::parallel);

/// Dispatches by name and maps errors to exit codes: ConfigError -> 3,
/// NonConvergent and GridTooCoarse -> 4, anything else -> 1.
CommandResult run_command(const std::string& name, const RunConfig& cfg,
                          const std::string& out_dir, Exec exec = Exec::parallel);

}  // namespace worm3
