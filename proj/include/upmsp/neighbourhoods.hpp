#pragma once

#include <array>
#include <optional>
#include <string>

#include "upmsp/rng.hpp"
#include "upmsp/solution.hpp"

namespace upmsp {

// Fixed ordinal order: Shift=1, Switch=2, TaskMove=3, Swap=4, DirectSwap=5,
// TwoShift=6 (enum value + 1).
enum class Neighbourhood : int {
    Shift = 0,
    Switch,
    TaskMove,
    Swap,
    DirectSwap,
    TwoShift,
};

inline constexpr int kNumNeighbourhoods = 6;
inline constexpr std::array<Neighbourhood, kNumNeighbourhoods>
    kAllNeighbourhoods = {Neighbourhood::Shift,      Neighbourhood::Switch,
                          Neighbourhood::TaskMove,   Neighbourhood::Swap,
                          Neighbourhood::DirectSwap, Neighbourhood::TwoShift};

const char* name_of(Neighbourhood id);
std::optional<Neighbourhood> neighbourhood_from_name(const std::string& s);

// One move, always centred on the makespan machine k* of the solution it
// was enumerated against. Field meaning by kind:
//   Shift      a = position on k* to remove from, b = final position
//   Switch     a < b, positions on k* to swap
//   TaskMove   a = position on k*, b = destination machine (!= k*),
//              c = insertion slot on b (0..load(b))
//   DirectSwap a = position on k*, b = other machine, c = position on b;
//              jobs exchange slots in place
//   Swap       a = position on k*, b = other machine, c = position on b;
//              each job is re-inserted at the completion-minimising slot of
//              the other machine (ties -> earliest slot)
//   TwoShift   a, c = distinct positions on k* (ordered pair); job at a goes
//              to the best slot of machine b (!= k*), then job at c to the
//              best slot of machine d (!= k*), b == d allowed
struct Move {
    Neighbourhood kind = Neighbourhood::Shift;
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    bool operator==(const Move&) const = default;
};

// Closed-form neighbourhood size for the current makespan machine.
long long cardinality(Neighbourhood id, const Solution& sol);

// Decodes the index-th move of the deterministic (lexicographic)
// enumeration, 0 <= index < cardinality(id, sol).
Move move_at(Neighbourhood id, const Solution& sol, long long index);

template <typename Fn>
void for_each_move(Neighbourhood id, const Solution& sol, Fn&& fn) {
    long long count = cardinality(id, sol);
    for (long long i = 0; i < count; ++i) fn(move_at(id, sol, i));
}

// Uniform over the enumeration via index sampling; nullopt when empty.
std::optional<Move> sample_uniform(Neighbourhood id, const Solution& sol,
                                   SplitMix64& rng);

// Insertion slot of `job` into `sequence` on `machine` minimising the
// resulting completion time, earliest slot on ties.
int best_insertion_slot(const Instance& inst, const std::vector<int>& sequence,
                        int machine, int job);

// Makespan of the neighbour reached by `move`, without mutating `sol`.
Time neighbour_cmax(const Instance& inst, const Solution& sol,
                    const Move& move);

// Applies `move` in place. Only the touched machines are re-evaluated; the
// cached cmax/spt/makespan_machine are updated incrementally. Moves are
// anchored on the makespan machine of the solution they were enumerated
// against; `anchor` < 0 means the current one. Throws std::out_of_range on
// invalid positions.
void apply_move(const Instance& inst, Solution& sol, const Move& move,
                int anchor = -1);

// Inverse move for the self-invertible kinds (Shift, Switch, DirectSwap),
// valid against the post-move solution. nullopt for the other kinds.
std::optional<Move> inverse_move(const Move& move);

}  // namespace upmsp
