#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laurent::cli {

/// Runs the `laurent` command line with argv-style arguments (args[0] is the
/// program name). Failures print one line `laurent: error[<code>]: <message>`
/// to err and return nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads real samples separated by newlines, commas or whitespace.
/// Throws laurent::InvalidInput naming the line of a malformed token.
[[nodiscard]] std::vector<double> parse_samples(std::istream& in);

}  // namespace laurent::cli
