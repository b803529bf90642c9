#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfenergy::cli {

enum ExitCode : int {
  Ok = 0,
  ParseFailure = 1,
  IllDefined = 2,
  ValidationFailure = 3,
  ComputationFailure = 4,
};

/// Entry point used by main(); args excludes argv[0]. Output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace selfenergy::cli
