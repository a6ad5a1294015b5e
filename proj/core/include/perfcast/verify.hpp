#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfcast {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst residual / first counterexample
};

/// Runs the library's self-checks: scoring-rule identities, derivative
/// consistency against finite differences, equivalence of the two
/// derivative paths, grid-vs-closed-form oracle agreement, incentive
/// verdicts, sweep trends, and output determinism.
std::vector<CheckResult> run_verification();

/// Prints one PASS/FAIL line per check; returns true iff all passed.
bool report(const std::vector<CheckResult>& results, std::ostream& out);

} // namespace perfcast
