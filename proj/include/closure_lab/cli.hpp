#pragma once

#include <ostream>

namespace closure_lab {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,  // a check answered No / fail / Unknown
  kExitUsage = 2,          // usage, parse, or precondition error
  kExitCap = 3,            // a resource cap was exceeded
  kExitInternal = 4,       // an identity failed to re-verify
};

// Runs one command. Reads CLOSURE_LAB_CONFIG from the environment unless a
// --config flag is given.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace closure_lab
