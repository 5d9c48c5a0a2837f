#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

// Dispatches the argument vector (without argv[0]) and writes to the given
// streams.  Exit codes: 0 ok, 1 verification failures, 2 usage errors,
// 3 domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nsg::cli
