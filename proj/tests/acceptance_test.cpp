// Runs the full cross-module verification suites and prints one
// pass/fail line per area. Exit status is nonzero when any area fails.

#include <chrono>
#include <cstdio>

#include "hgc/selftest.hpp"

int main() {
    bool allPassed = true;
    auto start = std::chrono::steady_clock::now();
    for (const auto& suite : hgc::runSelftest(hgc::SelftestLevel::Full)) {
        std::printf("[%s] %-14s %s\n", suite.passed ? "PASS" : "FAIL",
                    suite.name.c_str(), suite.detail.c_str());
        allPassed = allPassed && suite.passed;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("total time: %.1fs\n", secs);
    return allPassed ? 0 : 1;
}
