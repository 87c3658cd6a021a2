#pragma once

#include <string>
#include <vector>

namespace skb::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every acceptance check whose name contains `filter` (all when empty).
std::vector<CheckResult> run(const std::string& filter = "");

} // namespace skb::selftest
