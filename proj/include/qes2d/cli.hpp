#pragma once

#include <iosfwd>

namespace qes2d {

/// Exit codes: 0 ok, 1 verification failure, 2 invalid input or unphysical
/// branch, 3 solver ill-conditioning.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qes2d
