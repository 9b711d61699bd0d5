#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixres {

// Command-line front end, exposed for in-process testing.  `args` excludes
// the program name.  Returns the exit code: 0 success, 1 definition or
// precondition failure (the message names the violated definition), 2 usage
// or expression syntax error.  MIXRES_SEED in the environment overrides any
// --seed flag.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixres
