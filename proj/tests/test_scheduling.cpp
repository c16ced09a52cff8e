#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "upmsp/neighbourhoods.hpp"
#include "upmsp/sa.hpp"

using namespace upmsp;
using upmsp::testing::naive_eval;
using upmsp::testing::random_solution;

namespace {

// 2 jobs, 1 machine: p = (3, 4), setup 0->1 is 2, 1->0 is 5.
Instance two_job_instance() {
    Instance inst;
    inst.machines = 1;
    inst.jobs = 2;
    inst.max_setup = 5;
    inst.processing = {3, 4};
    inst.setup = {0, 2, 5, 0};
    inst.validate();
    return inst;
}

}  // namespace

TEST_CASE("evaluate_machine basics") {
    Instance inst = two_job_instance();
    CHECK(evaluate_machine(inst, std::vector<int>{}, 0) == 0);
    CHECK(evaluate_machine(inst, std::vector<int>{0, 1}, 0) == 3 + 2 + 4);
    CHECK(evaluate_machine(inst, std::vector<int>{1, 0}, 0) == 4 + 5 + 3);

    Instance single;
    single.machines = 1;
    single.jobs = 1;
    single.max_setup = 1;
    single.processing = {7};
    single.setup = {0};
    CHECK(evaluate_machine(single, std::vector<int>{0}, 0) == 7);
}

TEST_CASE("evaluate_machine rejects bad ids") {
    Instance inst = two_job_instance();
    CHECK_THROWS_AS(evaluate_machine(inst, std::vector<int>{0, 5}, 0),
                    std::invalid_argument);
}

TEST_CASE("make_solution enforces the partition property") {
    GeneratorSpec spec{.machines = 2, .jobs = 4, .seed = 7};
    Instance inst = generate(spec);
    CHECK_THROWS_AS(make_solution(inst, {{0, 1}, {1, 2}}),
                    std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(make_solution(inst, {{0, 1}, {2}}),
                    std::invalid_argument);  // missing job 3
    CHECK_THROWS_AS(make_solution(inst, {{0, 1, 2, 3}}),
                    std::invalid_argument);  // wrong machine count
    Solution sol = make_solution(inst, {{0, 2}, {1, 3}});
    CHECK(sol.cmax == std::max(sol.completion[0], sol.completion[1]));
}

TEST_CASE("evaluate_full trivial layouts") {
    GeneratorSpec spec{.machines = 3, .jobs = 5, .seed = 11};
    Instance inst = generate(spec);

    // everything on machine 0
    std::vector<std::vector<int>> seq(3);
    seq[0] = {0, 1, 2, 3, 4};
    Solution sol = make_solution(inst, seq);
    CHECK(sol.cmax == evaluate_machine(inst, sol.seq[0], 0));
    CHECK(sol.makespan_machine == 0);

    // two jobs alone on their machines
    Instance small;
    small.machines = 2;
    small.jobs = 2;
    small.max_setup = 1;
    small.processing = {5, 100, 100, 8};  // job 0 cheap on m0, job 1 on m1
    small.setup.assign(2 * 2 * 2, 1);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i) small.setup[(k * 2 + i) * 2 + i] = 0;
    Solution s2 = make_solution(small, {{0}, {1}});
    CHECK(s2.cmax == 8);
    CHECK(s2.spt == 13);
    CHECK(s2.makespan_machine == 1);
}

TEST_CASE("caches equal independent recomputation on random solutions") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        GeneratorSpec spec{.machines = 2 + static_cast<int>(rng.next_below(4)),
                           .jobs = 2 + static_cast<int>(rng.next_below(12)),
                           .max_setup = 9,
                           .seed = rng.next_u64()};
        Instance inst = generate(spec);
        Solution sol = random_solution(inst, rng);
        auto naive = naive_eval(inst, sol.seq);
        CHECK(sol.cmax == naive.cmax);
        CHECK(sol.spt == naive.spt);
        CHECK(sol.makespan_machine == naive.makespan_machine);
        CHECK(sol.completion == naive.completion);
    }
}

TEST_CASE("exhaustive optimum matches a permutation-based oracle") {
    // Independent oracle: all 2^5 assignments, all orderings via
    // next_permutation, evaluated with naive_eval.
    GeneratorSpec spec{.machines = 2, .jobs = 5, .max_setup = 9, .seed = 99};
    Instance inst = generate(spec);

    Time best = std::numeric_limits<Time>::max();
    for (int mask = 0; mask < (1 << 5); ++mask) {
        std::vector<int> a, b;
        for (int j = 0; j < 5; ++j) (mask & (1 << j) ? a : b).push_back(j);
        std::vector<std::vector<int>> groups = {a, b};
        std::sort(groups[0].begin(), groups[0].end());
        std::sort(groups[1].begin(), groups[1].end());
        std::vector<int> ga = groups[0];
        do {
            std::vector<int> gb = groups[1];
            do {
                best = std::min(best,
                                naive_eval(inst, {ga, gb}).cmax);
            } while (std::next_permutation(gb.begin(), gb.end()));
        } while (std::next_permutation(ga.begin(), ga.end()));
    }

    CHECK(exhaustive_optimum(inst) == best);
}

TEST_CASE("incremental caches survive random move chains") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorSpec spec{.machines = 2 + static_cast<int>(rng.next_below(3)),
                           .jobs = 4 + static_cast<int>(rng.next_below(10)),
                           .max_setup = 49,
                           .seed = rng.next_u64()};
        Instance inst = generate(spec);
        Solution sol = random_solution(inst, rng);
        for (int step = 0; step < 500; ++step) {
            auto id = kAllNeighbourhoods[rng.next_below(6)];
            auto move = sample_uniform(id, sol, rng);
            if (!move) continue;
            Time predicted = neighbour_cmax(inst, sol, *move);
            apply_move(inst, sol, *move);
            auto naive = naive_eval(inst, sol.seq);
            REQUIRE(sol.cmax == naive.cmax);
            REQUIRE(sol.cmax == predicted);
            REQUIRE(sol.spt == naive.spt);
            REQUIRE(sol.completion == naive.completion);
            REQUIRE(sol.makespan_machine == naive.makespan_machine);
        }
    }
}

TEST_CASE("self-invertible moves restore the solution") {
    SplitMix64 rng(5);
    GeneratorSpec spec{.machines = 3, .jobs = 10, .max_setup = 9, .seed = 3};
    Instance inst = generate(spec);
    for (int trial = 0; trial < 200; ++trial) {
        Solution sol = random_solution(inst, rng);
        int anchor = sol.makespan_machine;
        for (auto id : {Neighbourhood::Shift, Neighbourhood::Switch,
                        Neighbourhood::DirectSwap}) {
            auto move = sample_uniform(id, sol, rng);
            if (!move) continue;
            Solution copy = sol;
            apply_move(inst, copy, *move, anchor);
            apply_move(inst, copy, *inverse_move(*move), anchor);
            CHECK(copy.seq == sol.seq);
            CHECK(copy.cmax == sol.cmax);
            CHECK(copy.spt == sol.spt);
        }
    }
}

TEST_CASE("moves away from the makespan machine cannot improve cmax") {
    // Restatement with a hand-made relocation between two non-makespan
    // machines, outside the six neighbourhoods.
    SplitMix64 rng(77);
    GeneratorSpec spec{.machines = 4, .jobs = 12, .max_setup = 49, .seed = 13};
    Instance inst = generate(spec);
    for (int trial = 0; trial < 300; ++trial) {
        Solution sol = random_solution(inst, rng);
        int kstar = sol.makespan_machine;
        std::vector<int> others;
        for (int k = 0; k < inst.machines; ++k)
            if (k != kstar && !sol.seq[k].empty()) others.push_back(k);
        if (others.empty()) continue;
        int from = others[rng.next_below(others.size())];
        int to = kstar;
        while (to == kstar)
            to = static_cast<int>(rng.next_below(inst.machines));
        if (to == from) continue;
        auto seq = sol.seq;
        int pos = static_cast<int>(rng.next_below(seq[from].size()));
        int job = seq[from][pos];
        seq[from].erase(seq[from].begin() + pos);
        seq[to].insert(seq[to].begin() + rng.next_below(seq[to].size() + 1),
                       job);
        Solution moved = make_solution(inst, seq);
        CHECK(moved.cmax >= sol.cmax);
    }
}

TEST_CASE("delta percent is positive iff cmax strictly decreases") {
    SplitMix64 rng(31);
    GeneratorSpec spec{.machines = 2, .jobs = 8, .max_setup = 9, .seed = 8};
    Instance inst = generate(spec);
    Solution sol = random_solution(inst, rng);
    for (int trial = 0; trial < 500; ++trial) {
        auto id = kAllNeighbourhoods[rng.next_below(6)];
        auto move = sample_uniform(id, sol, rng);
        if (!move) continue;
        Time nc = neighbour_cmax(inst, sol, *move);
        double delta = (static_cast<double>(sol.cmax) - static_cast<double>(nc)) /
                       static_cast<double>(sol.cmax);
        CHECK((delta > 0) == (nc < sol.cmax));
    }
}
