#pragma once

// The semilab command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace semilab {

  // args excludes the program name.  Exit status: 0 when the computed
  // property holds (or there is none), 1 when it fails, 2 on bad input.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace semilab
