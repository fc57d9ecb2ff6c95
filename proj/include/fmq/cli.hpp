#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmq {

/// Exit codes: 0 success, 1 negative mathematical result under --strict,
/// 2 input or usage error, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmq
