#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace upmsp {

using Time = long long;

// R|s_ijk|Cmax instance: unrelated machines, machine- and
// sequence-dependent setup times, integer time units.
struct Instance {
    int machines = 0;      // m
    int jobs = 0;          // n
    Time max_setup = 0;    // S, upper bound used at generation time
    std::vector<Time> processing;  // jobs x machines, [job*m + machine]
    std::vector<Time> setup;       // machines x jobs x jobs,
                                   // [(machine*n + pred)*n + succ], diagonal 0

    Time proc(int job, int machine) const {
        return processing[static_cast<std::size_t>(job) * machines + machine];
    }
    Time setup_time(int machine, int pred, int succ) const {
        return setup[(static_cast<std::size_t>(machine) * jobs + pred) * jobs +
                     succ];
    }

    // Checks dimensions and positivity; throws std::invalid_argument.
    void validate() const;
};

struct GeneratorSpec {
    int machines = 1;
    int jobs = 1;
    Time max_setup = 9;
    Time proc_low = 1;
    Time proc_high = 99;
    std::uint64_t seed = 0;

    void validate() const;
};

// Deterministic: identical spec (including seed) gives a bit-identical
// instance. Processing times are uniform on {proc_low..proc_high}, setups
// uniform on {1..max_setup}, diagonal setups stored as 0.
Instance generate(const GeneratorSpec& spec);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_instance(const Instance& inst, std::ostream& out);
void write_instance_file(const Instance& inst,
                         const std::filesystem::path& path);

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::filesystem::path& path);

}  // namespace upmsp
