#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mukai {

// Entry point of the mukai-walls tool, callable in-process. args excludes
// the program name. Exit status: 0 verified/ok, 1 verification failure or
// undecided comparison, 2 usage or parameter errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
