#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trilength {

/// Knobs for the built-in consistency battery.  Defaults finish in well
/// under a minute.
struct SelftestOptions {
    int max_n = 6;          // exhaustive / random graph sizes
    int depth = 8;          // address enumeration depth
    std::uint64_t seed = 1; // randomised items
};

struct SelftestItem {
    std::string name;
    bool pass = false;
    std::string detail; // diagnostics on failure, summary stats on success
};

struct SelftestReport {
    std::vector<SelftestItem> items;
    bool pass = false;
};

/// Runs every named consistency item: encoding round trips, turn-parity
/// agreement, the closed form against the recursive walk, whole-tree
/// identification, edge shapes, recogniser versus the minor oracle,
/// triangulation structure, the end-to-end pipeline, and drawing
/// serialisation.  Never throws; failures are recorded per item.
SelftestReport run_selftest(const SelftestOptions& opts = {});

std::string format_selftest(const SelftestReport& r);

} // namespace trilength
