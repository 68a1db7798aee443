#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dimwit::cli {

// Exit codes: 0 success, 1 validation/domain/usage error, 2 size guard hit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSize = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied internally.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimwit::cli
