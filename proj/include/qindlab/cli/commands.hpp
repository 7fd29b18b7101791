#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qindlab/cli/config.hpp"

namespace qindlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `qindlab` tool. `args` excludes the program name.
// Results go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flattens a JSON document into "field,value" lines with dotted paths.
std::string flatten_csv(const Json& doc);

}  // namespace qindlab::cli
