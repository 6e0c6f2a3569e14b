#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz_atlas::cli {

// Runs one invocation. Exit code 0 on success, 2 on a usage error, 1 on a
// computation error; errors are reported as JSON objects with a stable
// "code" field.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz_atlas::cli
