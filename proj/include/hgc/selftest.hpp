#pragma once

#include <string>
#include <vector>

namespace hgc {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // pass counts, or the first counterexample
};

enum class SelftestLevel { Fast, Full };

/// Fast runs the small exhaustive identity checks; Full adds the
/// cross-module sweeps, one suite per acceptance area. Failures carry a
/// minimal counterexample in the detail string.
std::vector<SuiteResult> runSelftest(SelftestLevel level);

}  // namespace hgc
