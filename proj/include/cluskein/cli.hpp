#ifndef CLUSKEIN_CLI_HPP
#define CLUSKEIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cluskein {

// Command-line driver.  Exit status 0 on success, 1 when a mathematical
// check fails, 2 on input errors (malformed JSON, unknown flags, bad
// indices).  All numeric output is exact; no color is ever emitted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cluskein

#endif
