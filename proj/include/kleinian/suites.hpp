#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kleinian {

struct SuiteResult {
    std::string id;
    std::string title;
    bool passed = false;
    long checks = 0;
    long failures = 0;
    // Scope notes and the first few failures.
    std::vector<std::string> notes;
    double seconds = 0;
    std::string summary_line(int number) const;
};

struct SuiteInfo {
    std::string id;
    std::string title;
};

// In acceptance order.
const std::vector<SuiteInfo> &suite_catalog();
// Throws UsageError for an unknown id.
SuiteResult run_suite(const std::string &id, std::uint64_t seed = 20240601);

} // namespace kleinian
