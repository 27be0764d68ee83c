#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotgeo {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// args excludes the program name. Artifacts land at output.path, or in
/// $ROTGEO_OUTPUT_DIR under the same file name when that variable is set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotgeo
