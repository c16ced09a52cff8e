#include "upmsp/sa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace upmsp {

void SAConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must be in (0, 1)");
    if (budget_ms <= 0 && max_iters <= 0)
        throw std::invalid_argument("need a positive time or iteration budget");
    if (policy == PolicyKind::Adaptive &&
        !(p_max >= 1.0 / kNumNeighbourhoods && p_max < 1.0))
        throw std::invalid_argument("p_max must be in [1/6, 1)");
    if (plateau < 0) throw std::invalid_argument("plateau must be >= 0");
}

std::array<double, kNumNeighbourhoods> selection_probabilities(
    const std::array<double, kNumNeighbourhoods>& weights, double p_max) {
    std::array<double, kNumNeighbourhoods> p{};
    constexpr double H = kNumNeighbourhoods;
    for (int i = 0; i < kNumNeighbourhoods; ++i)
        p[i] = (1.0 - p_max + weights[i] * (H * p_max - 1.0)) / (H - 1.0);
    return p;
}

Solution initial_solution(const Instance& inst, SplitMix64& rng) {
    std::vector<int> order(inst.jobs);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    std::vector<std::vector<int>> seq(inst.machines);
    std::vector<Time> completion(inst.machines, 0);
    for (int job : order) {
        int best_k = 0;
        Time best_c = std::numeric_limits<Time>::max();
        for (int k = 0; k < inst.machines; ++k) {
            Time c = completion[k] + inst.proc(job, k);
            if (!seq[k].empty()) c += inst.setup_time(k, seq[k].back(), job);
            if (c < best_c) {
                best_c = c;
                best_k = k;
            }
        }
        seq[best_k].push_back(job);
        completion[best_k] = best_c;
    }
    return make_solution(inst, std::move(seq));
}

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

// Mean worsening delta over 100 random neighbours accepted with probability
// one half: T0 = mean(delta+) / ln 2.
double auto_temperature(const Instance& inst, const Solution& sol,
                        SplitMix64& rng) {
    double sum = 0.0;
    long long count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto id = kAllNeighbourhoods[rng.next_below(kNumNeighbourhoods)];
        auto move = sample_uniform(id, sol, rng);
        if (!move) continue;
        Time nc = neighbour_cmax(inst, sol, *move);
        if (nc > sol.cmax) {
            sum += static_cast<double>(nc - sol.cmax);
            ++count;
        }
    }
    if (count == 0) return 1.0;
    return (sum / static_cast<double>(count)) / std::log(2.0);
}

// Categorical draw over non-empty neighbourhoods, renormalised; -1 when all
// six are empty.
int draw_neighbourhood(const std::array<double, kNumNeighbourhoods>& probs,
                       const Solution& sol, SplitMix64& rng) {
    std::array<double, kNumNeighbourhoods> masked = probs;
    double total = 0.0;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        if (cardinality(kAllNeighbourhoods[i], sol) == 0) masked[i] = 0.0;
        total += masked[i];
    }
    if (total <= 0.0) return -1;
    double u = rng.next_unit() * total;
    double acc = 0.0;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        acc += masked[i];
        if (u < acc) return i;
    }
    for (int i = kNumNeighbourhoods - 1; i >= 0; --i)
        if (masked[i] > 0.0) return i;
    return -1;
}

std::array<double, kNumNeighbourhoods> adaptive_probabilities(
    const std::array<UtilityModel, kNumNeighbourhoods>& models,
    const Instance& inst, const Solution& sol, double t, double p_max) {
    std::array<double, kNumNeighbourhoods> utility{};
    double total = 0.0;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        double log_u = predict_log_utility(
            models[i], inst.machines, inst.jobs,
            static_cast<double>(inst.max_setup), t,
            static_cast<double>(sol.spt));
        utility[i] = std::pow(10.0, std::clamp(log_u, -300.0, 300.0));
        total += utility[i];
    }
    std::array<double, kNumNeighbourhoods> weights{};
    for (int i = 0; i < kNumNeighbourhoods; ++i) weights[i] = utility[i] / total;
    return selection_probabilities(weights, p_max);
}

}  // namespace

SAResult run_sa(const Instance& inst, const SAConfig& config,
                const std::array<UtilityModel, kNumNeighbourhoods>* models,
                TelemetrySink* sink, const std::string& run_id) {
    config.validate();
    if (config.policy == PolicyKind::Adaptive && models == nullptr)
        throw std::invalid_argument("adaptive policy needs utility models");

    SplitMix64 rng(config.seed);
    auto start = Clock::now();

    Solution sol = initial_solution(inst, rng);
    Solution best = sol;

    double temperature = config.initial_temperature > 0.0
                             ? config.initial_temperature
                             : auto_temperature(inst, sol, rng);
    SAResult result;
    result.initial_temperature = temperature;

    long long plateau = config.plateau > 0
                            ? config.plateau
                            : static_cast<long long>(inst.jobs) * inst.machines;

    const std::array<double, kNumNeighbourhoods> uniform_probs = {
        1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6};

    long long iter = 0;
    long long elapsed = 0;
    while (true) {
        if (config.max_iters > 0 && iter >= config.max_iters) break;
        if (config.budget_ms > 0 && (iter & 1023) == 0) {
            elapsed = elapsed_ms_since(start);
            if (elapsed >= config.budget_ms) break;
        }

        // Normalised time: deterministic under an iteration cap, wall-clock
        // fraction otherwise.
        double t;
        if (config.max_iters > 0)
            t = static_cast<double>(iter + 1) /
                static_cast<double>(config.max_iters);
        else
            t = std::min(1.0, std::max(static_cast<double>(elapsed) /
                                           static_cast<double>(config.budget_ms),
                                       1e-9));

        std::array<double, kNumNeighbourhoods> probs = uniform_probs;
        if (config.policy == PolicyKind::Adaptive)
            probs = adaptive_probabilities(*models, inst, sol, t, config.p_max);

        int pick = draw_neighbourhood(probs, sol, rng);
        if (pick >= 0) {
            ++result.selections[pick];
            Neighbourhood id = kAllNeighbourhoods[pick];
            Move move = *sample_uniform(id, sol, rng);
            Time nc = neighbour_cmax(inst, sol, move);
            Time delta = nc - sol.cmax;
            bool accept = delta <= 0;
            if (!accept && temperature > 0.0)
                accept = rng.next_unit() <
                         std::exp(-static_cast<double>(delta) / temperature);
            if (accept) {
                apply_move(inst, sol, move);
                ++result.accepted;
                ++result.incumbent_changes;
                if (sol.cmax < best.cmax) best = sol;
                if (sink && sink->due_next_change()) {
                    EnumerationEvent event;
                    event.run_id = run_id;
                    event.M = inst.machines;
                    event.J = inst.jobs;
                    event.S = inst.max_setup;
                    event.iteration = iter;
                    event.elapsed_ms = elapsed_ms_since(start);
                    event.t = t;
                    event.cmax = sol.cmax;
                    event.spt = sol.spt;
                    event.sum_completion = sum_completions(sol);
                    event.stats = census(inst, sol);
                    sink->record(event);
                }
            }
        }

        ++iter;
        if (iter % plateau == 0) temperature *= config.alpha;
    }

    result.best = std::move(best);
    result.best_cmax = result.best.cmax;
    result.iterations = iter;
    result.elapsed_ms = elapsed_ms_since(start);
    result.final_temperature = temperature;
    return result;
}

namespace {

// Minimum completion time of one machine over all orderings of `jobs`.
// Held-Karp over subsets, O(2^j * j^2) with j <= kExhaustiveJobLimit.
Time best_sequence_time(const Instance& inst, const std::vector<int>& jobs,
                        int machine) {
    int j = static_cast<int>(jobs.size());
    if (j == 0) return 0;
    const Time inf = std::numeric_limits<Time>::max() / 4;
    std::vector<Time> dp(static_cast<std::size_t>(1 << j) * j, inf);
    for (int i = 0; i < j; ++i)
        dp[static_cast<std::size_t>(1 << i) * j + i] =
            inst.proc(jobs[i], machine);
    for (int mask = 1; mask < (1 << j); ++mask)
        for (int last = 0; last < j; ++last) {
            Time cur = dp[static_cast<std::size_t>(mask) * j + last];
            if (!(mask & (1 << last)) || cur >= inf) continue;
            for (int next = 0; next < j; ++next) {
                if (mask & (1 << next)) continue;
                int nmask = mask | (1 << next);
                Time cand = cur +
                            inst.setup_time(machine, jobs[last], jobs[next]) +
                            inst.proc(jobs[next], machine);
                Time& slot = dp[static_cast<std::size_t>(nmask) * j + next];
                slot = std::min(slot, cand);
            }
        }
    Time best = inf;
    for (int last = 0; last < j; ++last)
        best = std::min(best, dp[static_cast<std::size_t>((1 << j) - 1) * j +
                                 last]);
    return best;
}

void enumerate_assignments(const Instance& inst, int job,
                           std::vector<std::vector<int>>& groups, Time& best) {
    if (job == inst.jobs) {
        Time cmax = 0;
        for (int k = 0; k < inst.machines; ++k)
            cmax = std::max(cmax, best_sequence_time(inst, groups[k], k));
        best = std::min(best, cmax);
        return;
    }
    for (int k = 0; k < inst.machines; ++k) {
        groups[k].push_back(job);
        enumerate_assignments(inst, job + 1, groups, best);
        groups[k].pop_back();
    }
}

}  // namespace

Time exhaustive_optimum(const Instance& inst) {
    if (inst.jobs > kExhaustiveJobLimit)
        throw std::invalid_argument(
            "exhaustive search is guarded to at most 8 jobs");
    std::vector<std::vector<int>> groups(inst.machines);
    Time best = std::numeric_limits<Time>::max();
    enumerate_assignments(inst, 0, groups, best);
    return best;
}

}  // namespace upmsp
