#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

/// Parses argv-style arguments and runs the selected subcommand, streaming
/// results to `out` and diagnostics to `err`. Exit codes: 0 for semantic
/// true (arrows / minimal / self-embeddable / found / all-pass), 1 for
/// semantic false or inconclusive, 2 for errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes {command, expectation} records, given as JSON text (typically a
/// file's contents), via run() and summarizes. Returns 0 when every record
/// passes, 1 otherwise.
int run_vectors(const std::string& json_text, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
