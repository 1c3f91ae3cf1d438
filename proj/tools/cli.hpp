#pragma once

// The `tcc` command line, callable in-process for tests.
//
// Exit codes: 0 success, 1 usage or input error, 2 fast path disagrees
// with the oracle, 3 a probability bound is violated. selftest exits 1
// when any criterion fails.

#include <iosfwd>
#include <string>
#include <vector>

namespace tcc {

/// `args` excludes the program name. A FILE argument of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tcc
