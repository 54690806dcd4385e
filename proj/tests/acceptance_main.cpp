// Acceptance battery: replays the core verification suite and prints one
// pass/fail line per criterion. Exit status 0 only when everything passes.

#include <cstdio>
#include <map>

#include "ogc/verify.hpp"

namespace {

const char* criterion_title(int c) {
    switch (c) {
        case 1: return "code parameters [N, K] across configurations";
        case 2: return "exhaustive minimum distance, even q";
        case 3: return "minimum-weight census and structure, q=2 n=2";
        case 4: return "odd-q regression, q=3 n=2";
        case 5: return "embedding dimension ranks";
        case 6: return "the four radical classes: weights, points, lines";
        case 7: return "recursive weight formula";
        case 8: return "residual weight value set and tangent criterion";
        case 9: return "symplectic subcode and its minimum distance";
        case 10: return "residual census weight identity";
    }
    return "?";
}

}  // namespace

int main() {
    ogc::VerifyReport rep;
    try {
        rep = ogc::run_suite("core");
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "suite aborted: %s\n", ex.what());
        return 1;
    }

    std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
    for (const auto& c : rep.checks) {
        if (c.skipped) continue;
        auto& t = tally[c.criterion];
        t.first += c.pass;
        t.second += 1;
    }

    bool all = true;
    for (int crit = 1; crit <= 10; ++crit) {
        const auto t = tally[crit];
        const bool ok = t.second > 0 && t.first == t.second;
        all = all && ok;
        std::printf("criterion %2d: %s  (%d/%d checks)  %s\n", crit, ok ? "PASS" : "FAIL",
                    t.first, t.second, criterion_title(crit));
    }
    for (const auto& c : rep.checks) {
        if (c.pass || c.skipped) continue;
        std::printf("  FAILED [%d] %s\n    claim:    %s\n    expected: %s\n    observed: %s\n",
                    c.criterion, c.name.c_str(), c.claim.c_str(), c.expected.c_str(),
                    c.observed.c_str());
    }
    std::printf("total: %zu passed, %zu failed, %zu skipped (%.1f ms)\n", rep.passed, rep.failed,
                rep.skipped, rep.elapsed_ms);
    return all ? 0 : 1;
}
