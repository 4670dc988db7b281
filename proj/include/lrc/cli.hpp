#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrc {

/// Runs one command-line invocation (args excludes the program name) and
/// returns its exit code: 0 ok, 1 invalid input or violated invariant,
/// 2 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrc
