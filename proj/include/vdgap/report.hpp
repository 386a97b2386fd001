#pragma once

// Structured outcome of a premise/conclusion verification run. Every conclusion
// carries both sides as exact value strings; orderings come from exact
// comparisons only.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdgap/exact_power.hpp"

namespace vdgap {

struct Premise {
    std::string description;
    bool pass = false;
};

struct Conclusion {
    std::string lhs;
    std::string rhs;
    std::string relation;                // ">=", "==", "divisible"
    std::optional<Ordering> ordering;    // present for ordered comparisons
    bool holds = false;
};

struct CheckReport {
    std::string name;
    std::vector<Premise> premises;
    std::optional<Conclusion> conclusion;
    std::string witness;                         // extremal pair/subset, empty if none
    std::map<std::string, std::string> details;  // echoed parameters, exact strings

    bool passed() const {
        for (const auto& p : premises) {
            if (!p.pass) return false;
        }
        return !conclusion || conclusion->holds;
    }
};

// Conclusion built from an exact power comparison that must come out >=.
Conclusion conclude_ge(const ExactPower& lhs, const ExactPower& rhs);

}  // namespace vdgap
