#include "upmsp/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace upmsp {

Time evaluate_machine(const Instance& inst, std::span<const int> sequence,
                      int machine) {
    Time total = 0;
    int prev = -1;
    for (int job : sequence) {
        if (job < 0 || job >= inst.jobs)
            throw std::invalid_argument("invalid job id in sequence");
        if (prev >= 0) total += inst.setup_time(machine, prev, job);
        total += inst.proc(job, machine);
        prev = job;
    }
    return total;
}

void refresh(const Instance& inst, Solution& sol) {
    sol.completion.resize(inst.machines);
    sol.cmax = 0;
    sol.spt = 0;
    sol.makespan_machine = 0;
    for (int k = 0; k < inst.machines; ++k) {
        sol.completion[k] = evaluate_machine(inst, sol.seq[k], k);
        if (sol.completion[k] > sol.cmax) {
            sol.cmax = sol.completion[k];
            sol.makespan_machine = k;
        }
        for (int job : sol.seq[k]) sol.spt += inst.proc(job, k);
    }
}

Solution make_solution(const Instance& inst,
                       std::vector<std::vector<int>> sequences) {
    if (static_cast<int>(sequences.size()) != inst.machines)
        throw std::invalid_argument("solution needs one sequence per machine");
    std::vector<char> seen(inst.jobs, 0);
    int count = 0;
    for (const auto& s : sequences)
        for (int job : s) {
            if (job < 0 || job >= inst.jobs)
                throw std::invalid_argument("invalid job id");
            if (seen[job]) throw std::invalid_argument("duplicate job id");
            seen[job] = 1;
            ++count;
        }
    if (count != inst.jobs)
        throw std::invalid_argument("every job must be assigned");

    Solution sol;
    sol.seq = std::move(sequences);
    refresh(inst, sol);
    return sol;
}

Time sum_completions(const Solution& sol) {
    Time total = 0;
    for (Time c : sol.completion) total += c;
    return total;
}

std::vector<int> assignment_of(const Instance& inst, const Solution& sol) {
    std::vector<int> machine_of(inst.jobs, -1);
    for (int k = 0; k < static_cast<int>(sol.seq.size()); ++k)
        for (int job : sol.seq[k]) machine_of[job] = k;
    return machine_of;
}

}  // namespace upmsp
