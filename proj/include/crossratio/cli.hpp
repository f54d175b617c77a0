#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossratio {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
	kExitOk = 0,
	kExitCheckFailed = 1, // verify/desargues ran but something did not hold
	kExitParse = 2,       // bad literal, bad flag, bad field selector
	kExitPrecondition = 3,
	kExitInfiniteSolution = 4,
	kExitIo = 5,
};

/// Runs the tool on `args` (without the program name), writing to the given
/// streams. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crossratio
