#pragma once

namespace ineqlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCandidate = 1,
  kExitInfeasible = 2,
  kExitUsage = 3,
  kExitInconclusive = 4,
};

int run_cli(int argc, char** argv);

}  // namespace ineqlab::cli
