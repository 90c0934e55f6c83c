#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdw {

// Outcome of one acceptance criterion. details holds the measured numbers
// and is deterministic for a given seed; wall-clock time never enters it.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string details;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::vector<int> only; // criterion indices to run; empty runs all eleven
    bool progress = false; // stream per-criterion status and timing to stderr
};

// Runs the acceptance criteria in index order and returns one result each.
// Criterion 11 reruns the other selected criteria with the same seed and
// compares the two serialized reports byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = AcceptanceOptions{});

// One line per criterion plus an overall verdict, aligned for reading.
std::string acceptance_table(const std::vector<CriterionResult>& results);

// Compact one-line-per-criterion serialization; the determinism criterion
// compares exactly this rendering across reruns.
std::string acceptance_report(const std::vector<CriterionResult>& results);

} // namespace gdw
