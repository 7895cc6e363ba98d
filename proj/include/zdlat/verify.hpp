#pragma once

#include "zdlat/fixtures.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zdlat {

struct PaperCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Replays every worked example (the nine-element lattice, its zero-divisor
/// graphs and radicals, the truncated inclusion lattice, and the two smallest
/// counterexamples) against the built-in fixtures. `figure1_text` can be
/// swapped for a modified copy to exercise the failure paths.
std::vector<PaperCheck> verify_paper(std::string_view figure1_text = kFigure1Text);

/// One `PASS name` / `FAIL name: detail` line per check plus a total.
std::string format_verification(const std::vector<PaperCheck>& checks);

inline bool all_passed(const std::vector<PaperCheck>& checks)
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

} // namespace zdlat
