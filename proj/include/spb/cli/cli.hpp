#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spb::io {

/// Runs one spbundle invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on a mathematical obstruction or failed suite,
/// 2 on a usage or schema error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);

} // namespace spb::io
