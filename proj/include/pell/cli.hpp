#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pell {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

// Runs the `pell` command line. `args` excludes the program name.
//
//   pi    --method {machin,salamin-brent,pi4} [--times-sqrt2]
//   pip   --p P [--via {closed,agm}]
//   verify --identity NAME [--p P] [--k K] [--a A --b B]
//   trace {p2,p3,p4} A B
//
// Common flags: --bits N, --digits D, --json, --csv. Without --bits the
// precision comes from PELL_BITS, then 256. --digits alone selects just
// enough bits for the request. Decimal output is truncated, not rounded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pell
