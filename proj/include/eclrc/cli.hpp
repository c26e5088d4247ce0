#ifndef ECLRC_CLI_HPP
#define ECLRC_CLI_HPP

#include <iosfwd>

namespace eclrc::cli {

/// Exit code 0 on success, 1 on a domain error (JSON object on err), 2 on
/// a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace eclrc::cli

#endif
