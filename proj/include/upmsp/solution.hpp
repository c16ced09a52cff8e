#pragma once

#include <span>
#include <vector>

#include "upmsp/instance.hpp"

namespace upmsp {

// Per-machine job sequences with cached evaluation. Caches are maintained
// incrementally by apply_move and must always match refresh().
struct Solution {
    std::vector<std::vector<int>> seq;  // seq[machine] = ordered job ids
    std::vector<Time> completion;       // C_k per machine
    Time cmax = 0;                      // max_k C_k
    Time spt = 0;                       // sum of p[job][assigned machine]
    int makespan_machine = 0;           // smallest index achieving cmax
};

// Completion time of one machine: processing plus inter-job setups, no
// setup before the first job. Empty sequence -> 0.
Time evaluate_machine(const Instance& inst, std::span<const int> sequence,
                      int machine);

// Recomputes every cache of `sol` from its sequences.
void refresh(const Instance& inst, Solution& sol);

// Builds a Solution from raw sequences, checking the partition property
// (every job exactly once). Throws std::invalid_argument on violation.
Solution make_solution(const Instance& inst,
                       std::vector<std::vector<int>> sequences);

Time sum_completions(const Solution& sol);

// machine(job) lookup table, -1 for unassigned (never the case for a valid
// Solution).
std::vector<int> assignment_of(const Instance& inst, const Solution& sol);

}  // namespace upmsp
