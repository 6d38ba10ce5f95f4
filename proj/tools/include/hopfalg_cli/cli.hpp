#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfalg::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kSchemaError = 3,
  kNotProjective = 4,
  kNoAntipode = 5,
  kIllDefined = 6,
  kNoOppositeAntipode = 7,
  kUsage = 64,
  kInputUnreadable = 66,
  kInternal = 70,
  kOutputUnwritable = 73,
};

// argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hopfalg::cli
