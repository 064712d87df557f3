#pragma once

#include "confspace/manifold.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace confspace {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int check_failed = 2;
} // namespace exit_code

/// Resolves "builtin:<name>[:<param>]" or "file:<path>".
ManifoldData resolve_manifold(const std::string& source);

/// Runs the command line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace confspace
