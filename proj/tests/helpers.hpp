#pragma once

#include <algorithm>
#include <vector>

#include "upmsp/instance.hpp"
#include "upmsp/rng.hpp"
#include "upmsp/solution.hpp"

namespace upmsp::testing {

inline Solution random_solution(const Instance& inst, SplitMix64& rng) {
    std::vector<std::vector<int>> seq(inst.machines);
    for (int job = 0; job < inst.jobs; ++job)
        seq[rng.next_below(inst.machines)].push_back(job);
    for (auto& s : seq) rng.shuffle(s);
    return make_solution(inst, std::move(seq));
}

// Independent full recomputation, deliberately written as its own loop and
// not via evaluate_machine.
struct NaiveEval {
    Time cmax = 0;
    Time spt = 0;
    int makespan_machine = 0;
    std::vector<Time> completion;
};

inline NaiveEval naive_eval(const Instance& inst,
                            const std::vector<std::vector<int>>& seq) {
    NaiveEval out;
    out.completion.assign(inst.machines, 0);
    for (int k = 0; k < inst.machines; ++k) {
        Time c = 0;
        for (std::size_t pos = 0; pos < seq[k].size(); ++pos) {
            int job = seq[k][pos];
            if (pos > 0) c += inst.setup[(static_cast<std::size_t>(k) * inst.jobs +
                                          seq[k][pos - 1]) *
                                             inst.jobs +
                                         job];
            c += inst.processing[static_cast<std::size_t>(job) * inst.machines +
                                 k];
            out.spt += inst.processing[static_cast<std::size_t>(job) *
                                           inst.machines +
                                       k];
        }
        out.completion[k] = c;
        if (c > out.cmax) {
            out.cmax = c;
            out.makespan_machine = k;
        }
    }
    return out;
}

}  // namespace upmsp::testing
