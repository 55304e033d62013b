#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latrect::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,     // bad arguments or unparsable shape spec
    kMismatch = 3,  // some verification disagreed
    kExternal = 4,  // OEIS fetch / cache failure
};

/// Largest order the naive oracle is run on from the command line.
inline constexpr int kNaiveOrderLimit = 40;

/// Runs the command line in-process. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace latrect::cli
