#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeroseq {

// Runs one CLI invocation. JSON payloads go to out, diagnostics to err.
// Returns 0 on success / witness found / verification passed, 1 on a
// negative result (no witness, non-member, failed verification), 2 on usage
// or input errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace zeroseq
