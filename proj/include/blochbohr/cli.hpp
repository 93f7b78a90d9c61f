#ifndef BLOCHBOHR_CLI_HPP
#define BLOCHBOHR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bloch {

// Command-line front end; args exclude the program name.  Returns the process
// exit code: 0 ok, 1 check/assertion mismatch, 2 usage or parameter error,
// 3 no root certified, 4 tail/truncation failure, 5 internal numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bloch

#endif
