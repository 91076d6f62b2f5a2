#ifndef TROPCONE_CLI_HPP
#define TROPCONE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcone::cli {

// Run the command line tool. Exit codes: 0 success, 1 bad input
// (parse/shape/domain), 2 budget exceeded, 3 precondition violation.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace tropcone::cli

#endif
