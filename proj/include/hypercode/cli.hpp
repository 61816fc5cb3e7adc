#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercode::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit status: 0 success, 1 domain error, 2 usage error.
int run(int argc, char** argv);

/// Same as above with the argument vector (without program name) and
/// explicit output streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercode::cli
