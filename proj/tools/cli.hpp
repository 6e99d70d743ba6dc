#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw::cli {

enum Exit : int { ok = 0, usage = 1, verification_failed = 2, null_result = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw::cli
