#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutseq::cli {

enum Exit { ok = 0, internal = 1, invalid = 2, inconclusive = 3 };

// One command line without the program name. Reports go to `out`, usage and messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON lines {"command": "...", "args": {"flag": value, ...}} from `in`, one report per line.
// Returns the most severe exit code seen (1, then 2, then 3).
int run_batch(std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cutseq::cli
