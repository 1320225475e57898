#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imptab {

inline constexpr const char* kCliVersion = "1.0.0";

// Full command-line driver; args excludes the program name. Returns the
// process exit code: 0 on success, 1 when a requested verification fails,
// 2 for usage errors (including census-cap refusals). Identical invocations
// write identical bytes to `out`; warnings go to `err` in text and csv modes
// and into the JSON envelope in json mode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imptab
