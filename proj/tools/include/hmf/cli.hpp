#ifndef HMF_CLI_HPP
#define HMF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hmf::cli {

/* Runs the hmf command line on `args` (without the program name).
 * Returns 0 on success, 1 on a domain error (one JSON line on `err`) and
 * 2 on a usage error (help text on `err`). */
int dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

}  // namespace hmf::cli

#endif  // HMF_CLI_HPP
