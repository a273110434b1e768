#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lls::cli {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMalformed = 2;

/// Runs one `lls` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lls::cli
