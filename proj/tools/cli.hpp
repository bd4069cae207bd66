#ifndef CHORDWEAVE_TOOLS_CLI_HPP_
#define CHORDWEAVE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace chordweave::cli {

  //! Exit codes.
  enum Exit : int {
    ok         = 0,
    failure    = 1,  // parse, validation, I/O, roundtrip FAIL
    usage      = 2,
    rejected   = 3,  // check: the tree is not an intersection graph
    guard_rail = 4,
    mismatch   = 5,  // verify-oracle found a disagreement
  };

  //! Runs one command line (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace chordweave::cli

#endif  // CHORDWEAVE_TOOLS_CLI_HPP_
