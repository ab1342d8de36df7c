#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhlrw {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParseFailure = 2, kNotDH = 3, kInternal = 4 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dhlrw
