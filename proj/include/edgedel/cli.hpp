#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgedel::cli {

/// Entry point behind the binary. Exit codes: 0 completed (including
/// answer = no), 2 usage or input error, 3 guard exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgedel::cli
