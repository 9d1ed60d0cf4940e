#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral {

/// Full command-line surface, factored out of main() so tests can drive it.
/// Returns the process exit code: 0 on success, 1 for bad input or usage,
/// 2 when an explicitly requested assertion (e.g. --expect-rz, verify) fails.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace umbral
