#pragma once

#include <iosfwd>

namespace diracspec {

// Exit status: 0 success, 1 domain error, 2 usage error.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace diracspec
