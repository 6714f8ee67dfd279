#pragma once

#include <iosfwd>

namespace mzv {

enum ExitCode { kExitOk = 0, kExitRefuted = 1, kExitUsage = 2 };

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mzv
