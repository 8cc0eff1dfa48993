#pragma once

#include <iosfwd>

namespace mzv::cli {

// Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mzv::cli
