#pragma once

#include <array>
#include <optional>
#include <string>

#include "upmsp/regression.hpp"
#include "upmsp/telemetry.hpp"

namespace upmsp {

enum class PolicyKind { Uniform, Adaptive };

struct SAConfig {
    double initial_temperature = 0.0;  // <= 0 means auto-calibrate
    double alpha = 0.96;               // cooling rate, in (0, 1)
    long long plateau = 0;             // iterations per temperature,
                                       // 0 means n * m
    long long budget_ms = 30000;       // wall-clock cap, <= 0 disables
    long long max_iters = 1000000;     // iteration cap, <= 0 disables
    std::uint64_t seed = 0;
    PolicyKind policy = PolicyKind::Uniform;
    double p_max = 0.5;                // Adaptive only, in [1/6, 1)
    long long census_every = 1;        // record every k-th incumbent change

    void validate() const;  // throws std::invalid_argument
};

// Neighbourhood selection probabilities from utility weights:
//   p_i = (1 - p_max + w_i * (|H| p_max - 1)) / (|H| - 1)
// Uniform weights give exactly 1/6 each; a unit weight gives p_max.
std::array<double, kNumNeighbourhoods> selection_probabilities(
    const std::array<double, kNumNeighbourhoods>& weights, double p_max);

// Greedy construction: jobs in random order, each appended to the machine
// minimising that machine's resulting completion time (ties -> smallest
// machine index).
Solution initial_solution(const Instance& inst, SplitMix64& rng);

struct SAResult {
    Solution best;
    Time best_cmax = 0;
    long long iterations = 0;
    long long elapsed_ms = 0;
    long long incumbent_changes = 0;
    long long accepted = 0;
    std::array<long long, kNumNeighbourhoods> selections{};
    double initial_temperature = 0.0;
    double final_temperature = 0.0;
};

// Simulated Annealing run. `models` must be non-null for the Adaptive
// policy. `sink` is optional; when present, every census_every-th incumbent
// change triggers a complete six-neighbourhood enumeration and one recorded
// event. With an iteration cap, normalised time is iteration / max_iters
// and the trajectory is fully deterministic; wall clock only terminates.
SAResult run_sa(const Instance& inst, const SAConfig& config,
                const std::array<UtilityModel, kNumNeighbourhoods>* models =
                    nullptr,
                TelemetrySink* sink = nullptr,
                const std::string& run_id = "run");

// Brute force over all assignments and sequencings; guarded to inst.jobs <=
// kExhaustiveJobLimit (throws std::invalid_argument beyond it).
inline constexpr int kExhaustiveJobLimit = 8;
Time exhaustive_optimum(const Instance& inst);

}  // namespace upmsp
