#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "upmsp/neighbourhoods.hpp"

namespace upmsp {

// Aggregates of one complete enumeration of one neighbourhood.
// delta values are relative improvements (f(x) - f(x')) / f(x).
struct NeighbourhoodStats {
    Neighbourhood id = Neighbourhood::Shift;
    long long size = 0;       // |eta_i(x)|
    long long improving = 0;  // |eta*_i(x)|
    double pi = 0.0;          // improving / size, 0 when size == 0
    std::optional<double> delta_best;   // max delta, empty when size == 0
    std::optional<double> delta_mean;
    std::optional<double> delta_worst;
    std::optional<double> expected_improvement;  // mean delta over improving
                                                 // neighbours, empty when none
    double expected_utility = 0.0;  // sum of improving deltas / size
};

struct EnumerationEvent {
    std::string run_id;
    int M = 0;
    int J = 0;
    Time S = 0;
    long long iteration = 0;
    long long elapsed_ms = 0;
    double t = 0.0;  // normalised time in (0, 1]
    Time cmax = 0;
    Time spt = 0;
    Time sum_completion = 0;
    std::array<NeighbourhoodStats, kNumNeighbourhoods> stats;
};

// Aggregates a list of relative improvements into stats; improving means
// delta > 0, which for integer makespans coincides with cmax decreasing.
NeighbourhoodStats stats_from_deltas(Neighbourhood id,
                                     const std::vector<double>& deltas);

// Complete enumeration of one neighbourhood of the incumbent. Pure
// observation: `sol` is untouched.
NeighbourhoodStats census_one(const Instance& inst, const Solution& sol,
                              Neighbourhood id);

std::array<NeighbourhoodStats, kNumNeighbourhoods> census(const Instance& inst,
                                                          const Solution& sol);

// JSON Lines serialisation, fixed key order. Undefined fields are null.
std::string event_to_json_line(const EnumerationEvent& event);
EnumerationEvent event_from_json_line(const std::string& line);

std::vector<EnumerationEvent> read_events_file(
    const std::filesystem::path& path);

// Append-only sink recording every k-th incumbent change.
class TelemetrySink {
public:
    TelemetrySink(const std::filesystem::path& path, long long every_k = 1);

    // True when the change counter says this incumbent change is recorded.
    bool due_next_change();
    void record(const EnumerationEvent& event);

    long long recorded() const { return recorded_; }

private:
    std::ofstream out_;
    long long every_k_;
    long long changes_seen_ = 0;
    long long recorded_ = 0;
};

}  // namespace upmsp
