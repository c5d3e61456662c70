#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etfkit::cli {

/// Runs one command. args excludes the program name. Returns 0 on success,
/// 1 on domain errors (not an ETF/SRG, not eligible, non-integral
/// parameters) and 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etfkit::cli
