#pragma once

#include <iosfwd>

namespace lacunary {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitResource = 3,
  kExitInternal = 4,
};

/// Entry point of the `lacunary` command. argv[0] is the program name.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lacunary
