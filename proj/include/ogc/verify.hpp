#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogc/code.hpp"

namespace ogc {

struct CheckRecord {
    int criterion = 0;  // 1..10 for the core battery, 0 for extended extras
    std::string name;
    std::string claim;  // the identity being exercised, stated inline
    std::string expected;
    std::string observed;
    bool pass = false;
    bool skipped = false;
    std::string reason;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t budget = 0;
    unsigned workers = 0;
    std::vector<std::string> configs;
    std::vector<CheckRecord> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    double elapsed_ms = 0.0;

    bool all_pass() const { return failed == 0 && !checks.empty(); }
};

/// Replays the verification battery. "core" runs the ten-criterion battery;
/// "extended" adds spectra, the budget-refusal path, more class checks and
/// the larger symplectic scan. Random form streams are seeded per
/// (criterion, configuration), so reports are reproducible.
VerifyReport run_suite(const std::string& name, std::uint64_t budget = std::uint64_t(1) << 24,
                       unsigned workers = 0);

}  // namespace ogc
