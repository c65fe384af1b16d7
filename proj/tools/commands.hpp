#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seamrep::cli {

enum ExitCode { Ok = 0, Usage = 2, OutOfDelta = 3, Verification = 4 };

// args excludes the program name. Output that --out would redirect goes to out otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seamrep::cli
