#include "upmsp/neighbourhoods.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace upmsp {

const char* name_of(Neighbourhood id) {
    switch (id) {
        case Neighbourhood::Shift: return "shift";
        case Neighbourhood::Switch: return "switch";
        case Neighbourhood::TaskMove: return "task_move";
        case Neighbourhood::Swap: return "swap";
        case Neighbourhood::DirectSwap: return "direct_swap";
        case Neighbourhood::TwoShift: return "two_shift";
    }
    return "?";
}

std::optional<Neighbourhood> neighbourhood_from_name(const std::string& s) {
    for (Neighbourhood id : kAllNeighbourhoods)
        if (s == name_of(id)) return id;
    return std::nullopt;
}

namespace {

// idx in [0, m-1) -> machine index skipping `skip`.
int other_machine(int idx, int skip) { return idx < skip ? idx : idx + 1; }

int load(const Solution& sol, int k) {
    return static_cast<int>(sol.seq[k].size());
}

}  // namespace

long long cardinality(Neighbourhood id, const Solution& sol) {
    int kstar = sol.makespan_machine;
    long long nstar = load(sol, kstar);
    int m = static_cast<int>(sol.seq.size());
    long long others = 0;       // jobs on machines != k*
    long long other_slots = 0;  // sum of (n_k + 1) over machines != k*
    for (int k = 0; k < m; ++k) {
        if (k == kstar) continue;
        others += load(sol, k);
        other_slots += load(sol, k) + 1;
    }
    switch (id) {
        case Neighbourhood::Shift: return nstar * (nstar - 1);
        case Neighbourhood::Switch: return nstar * (nstar - 1) / 2;
        case Neighbourhood::TaskMove: return nstar * other_slots;
        case Neighbourhood::Swap: return nstar * others;
        case Neighbourhood::DirectSwap: return nstar * others;
        case Neighbourhood::TwoShift:
            return nstar * (nstar - 1) * (m - 1) * (m - 1);
    }
    return 0;
}

Move move_at(Neighbourhood id, const Solution& sol, long long index) {
    int kstar = sol.makespan_machine;
    int nstar = load(sol, kstar);
    int m = static_cast<int>(sol.seq.size());
    if (index < 0 || index >= cardinality(id, sol))
        throw std::out_of_range("move index out of range");

    switch (id) {
        case Neighbourhood::Shift: {
            int p = static_cast<int>(index / (nstar - 1));
            int q = static_cast<int>(index % (nstar - 1));
            if (q >= p) ++q;
            return {Neighbourhood::Shift, p, q, 0, 0};
        }
        case Neighbourhood::Switch: {
            // pairs (p, q), p < q, lexicographic
            long long i = index;
            int p = 0;
            while (i >= nstar - 1 - p) {
                i -= nstar - 1 - p;
                ++p;
            }
            int q = p + 1 + static_cast<int>(i);
            return {Neighbourhood::Switch, p, q, 0, 0};
        }
        case Neighbourhood::TaskMove: {
            long long slots = cardinality(id, sol) / nstar;
            int p = static_cast<int>(index / slots);
            long long rest = index % slots;
            for (int k = 0; k < m; ++k) {
                if (k == kstar) continue;
                long long here = load(sol, k) + 1;
                if (rest < here)
                    return {Neighbourhood::TaskMove, p, k,
                            static_cast<int>(rest), 0};
                rest -= here;
            }
            break;
        }
        case Neighbourhood::Swap:
        case Neighbourhood::DirectSwap: {
            long long others = cardinality(id, sol) / nstar;
            int p = static_cast<int>(index / others);
            long long rest = index % others;
            for (int k = 0; k < m; ++k) {
                if (k == kstar) continue;
                long long here = load(sol, k);
                if (rest < here)
                    return {id, p, k, static_cast<int>(rest), 0};
                rest -= here;
            }
            break;
        }
        case Neighbourhood::TwoShift: {
            long long dims = static_cast<long long>(m - 1) * (nstar - 1) *
                             (m - 1);
            int pa = static_cast<int>(index / dims);
            long long rest = index % dims;
            long long dims2 = static_cast<long long>(nstar - 1) * (m - 1);
            int ka = other_machine(static_cast<int>(rest / dims2), kstar);
            rest %= dims2;
            int pb = static_cast<int>(rest / (m - 1));
            if (pb >= pa) ++pb;
            int kb = other_machine(static_cast<int>(rest % (m - 1)), kstar);
            return {Neighbourhood::TwoShift, pa, ka, pb, kb};
        }
    }
    throw std::logic_error("move_at: unreachable");
}

std::optional<Move> sample_uniform(Neighbourhood id, const Solution& sol,
                                   SplitMix64& rng) {
    long long count = cardinality(id, sol);
    if (count <= 0) return std::nullopt;
    return move_at(id, sol, static_cast<long long>(
                                rng.next_below(static_cast<std::uint64_t>(count))));
}

int best_insertion_slot(const Instance& inst, const std::vector<int>& sequence,
                        int machine, int job) {
    int best_slot = 0;
    Time best = std::numeric_limits<Time>::max();
    std::vector<int> tmp;
    tmp.reserve(sequence.size() + 1);
    for (int slot = 0; slot <= static_cast<int>(sequence.size()); ++slot) {
        tmp.assign(sequence.begin(), sequence.end());
        tmp.insert(tmp.begin() + slot, job);
        Time c = evaluate_machine(inst, tmp, machine);
        if (c < best) {
            best = c;
            best_slot = slot;
        }
    }
    return best_slot;
}

namespace {

// New sequences of the machines a move touches; everything else is
// untouched.
struct Touched {
    int count = 0;
    int machine[3] = {-1, -1, -1};
    std::vector<int> seq[3];
};

void check_pos(const std::vector<int>& s, int pos) {
    if (pos < 0 || pos >= static_cast<int>(s.size()))
        throw std::out_of_range("move position out of range");
}

Touched modified_sequences(const Instance& inst, const Solution& sol,
                           const Move& move, int kstar) {
    Touched out;
    const auto& star = sol.seq[kstar];
    switch (move.kind) {
        case Neighbourhood::Shift: {
            check_pos(star, move.a);
            check_pos(star, move.b);
            out.count = 1;
            out.machine[0] = kstar;
            out.seq[0] = star;
            int job = out.seq[0][move.a];
            out.seq[0].erase(out.seq[0].begin() + move.a);
            out.seq[0].insert(out.seq[0].begin() + move.b, job);
            break;
        }
        case Neighbourhood::Switch: {
            check_pos(star, move.a);
            check_pos(star, move.b);
            out.count = 1;
            out.machine[0] = kstar;
            out.seq[0] = star;
            std::swap(out.seq[0][move.a], out.seq[0][move.b]);
            break;
        }
        case Neighbourhood::TaskMove: {
            check_pos(star, move.a);
            const auto& dest = sol.seq[move.b];
            if (move.c < 0 || move.c > static_cast<int>(dest.size()))
                throw std::out_of_range("insertion slot out of range");
            out.count = 2;
            out.machine[0] = kstar;
            out.machine[1] = move.b;
            out.seq[0] = star;
            int job = out.seq[0][move.a];
            out.seq[0].erase(out.seq[0].begin() + move.a);
            out.seq[1] = dest;
            out.seq[1].insert(out.seq[1].begin() + move.c, job);
            break;
        }
        case Neighbourhood::DirectSwap: {
            check_pos(star, move.a);
            check_pos(sol.seq[move.b], move.c);
            out.count = 2;
            out.machine[0] = kstar;
            out.machine[1] = move.b;
            out.seq[0] = star;
            out.seq[1] = sol.seq[move.b];
            std::swap(out.seq[0][move.a], out.seq[1][move.c]);
            break;
        }
        case Neighbourhood::Swap: {
            check_pos(star, move.a);
            check_pos(sol.seq[move.b], move.c);
            out.count = 2;
            out.machine[0] = kstar;
            out.machine[1] = move.b;
            out.seq[0] = star;
            out.seq[1] = sol.seq[move.b];
            int job_i = out.seq[0][move.a];
            int job_j = out.seq[1][move.c];
            out.seq[0].erase(out.seq[0].begin() + move.a);
            out.seq[1].erase(out.seq[1].begin() + move.c);
            int slot_j = best_insertion_slot(inst, out.seq[0], kstar, job_j);
            out.seq[0].insert(out.seq[0].begin() + slot_j, job_j);
            int slot_i = best_insertion_slot(inst, out.seq[1], move.b, job_i);
            out.seq[1].insert(out.seq[1].begin() + slot_i, job_i);
            break;
        }
        case Neighbourhood::TwoShift: {
            check_pos(star, move.a);
            check_pos(star, move.c);
            if (move.a == move.c)
                throw std::out_of_range("two-shift needs distinct positions");
            out.machine[0] = kstar;
            out.seq[0] = star;
            int job_a = out.seq[0][move.a];
            int job_b = out.seq[0][move.c];
            int hi = std::max(move.a, move.c);
            int lo = std::min(move.a, move.c);
            out.seq[0].erase(out.seq[0].begin() + hi);
            out.seq[0].erase(out.seq[0].begin() + lo);
            if (move.b == move.d) {
                out.count = 2;
                out.machine[1] = move.b;
                out.seq[1] = sol.seq[move.b];
                int slot_a =
                    best_insertion_slot(inst, out.seq[1], move.b, job_a);
                out.seq[1].insert(out.seq[1].begin() + slot_a, job_a);
                int slot_b =
                    best_insertion_slot(inst, out.seq[1], move.b, job_b);
                out.seq[1].insert(out.seq[1].begin() + slot_b, job_b);
            } else {
                out.count = 3;
                out.machine[1] = move.b;
                out.machine[2] = move.d;
                out.seq[1] = sol.seq[move.b];
                out.seq[2] = sol.seq[move.d];
                int slot_a =
                    best_insertion_slot(inst, out.seq[1], move.b, job_a);
                out.seq[1].insert(out.seq[1].begin() + slot_a, job_a);
                int slot_b =
                    best_insertion_slot(inst, out.seq[2], move.d, job_b);
                out.seq[2].insert(out.seq[2].begin() + slot_b, job_b);
            }
            break;
        }
    }
    return out;
}

}  // namespace

Time neighbour_cmax(const Instance& inst, const Solution& sol,
                    const Move& move) {
    Touched touched =
        modified_sequences(inst, sol, move, sol.makespan_machine);
    Time best = 0;
    for (int k = 0; k < inst.machines; ++k) {
        bool is_touched = false;
        for (int i = 0; i < touched.count; ++i)
            if (touched.machine[i] == k) is_touched = true;
        if (!is_touched) best = std::max(best, sol.completion[k]);
    }
    for (int i = 0; i < touched.count; ++i)
        best = std::max(best, evaluate_machine(inst, touched.seq[i],
                                               touched.machine[i]));
    return best;
}

void apply_move(const Instance& inst, Solution& sol, const Move& move,
                int anchor) {
    int kstar = anchor >= 0 ? anchor : sol.makespan_machine;
    Touched touched = modified_sequences(inst, sol, move, kstar);
    for (int i = 0; i < touched.count; ++i) {
        int k = touched.machine[i];
        for (int job : sol.seq[k]) sol.spt -= inst.proc(job, k);
        sol.seq[k] = std::move(touched.seq[i]);
        for (int job : sol.seq[k]) sol.spt += inst.proc(job, k);
        sol.completion[k] = evaluate_machine(inst, sol.seq[k], k);
    }
    sol.cmax = 0;
    sol.makespan_machine = 0;
    for (int k = 0; k < inst.machines; ++k)
        if (sol.completion[k] > sol.cmax) {
            sol.cmax = sol.completion[k];
            sol.makespan_machine = k;
        }
}

std::optional<Move> inverse_move(const Move& move) {
    switch (move.kind) {
        case Neighbourhood::Shift:
            return Move{Neighbourhood::Shift, move.b, move.a, 0, 0};
        case Neighbourhood::Switch:
        case Neighbourhood::DirectSwap:
            return move;
        default:
            return std::nullopt;
    }
}

}  // namespace upmsp
