#include "upmsp/instance.hpp"

#include <fstream>
#include <sstream>

#include "upmsp/rng.hpp"

namespace upmsp {

namespace {

// Streams for counter-based generation; field draws are independent of
// evaluation order.
constexpr std::uint64_t kStreamProcessing = 1;
constexpr std::uint64_t kStreamSetup = 2;

Time draw_in(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
             Time lo, Time hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Time>(keyed_draw(seed, stream, index) % range);
}

}  // namespace

void Instance::validate() const {
    if (machines < 1 || jobs < 1)
        throw std::invalid_argument("instance needs at least 1 job and 1 machine");
    if (processing.size() != static_cast<std::size_t>(jobs) * machines)
        throw std::invalid_argument("processing matrix has wrong size");
    if (setup.size() !=
        static_cast<std::size_t>(machines) * jobs * jobs)
        throw std::invalid_argument("setup tensor has wrong size");
    for (Time p : processing)
        if (p < 1) throw std::invalid_argument("processing times must be >= 1");
    for (int k = 0; k < machines; ++k)
        for (int i = 0; i < jobs; ++i)
            for (int j = 0; j < jobs; ++j) {
                Time s = setup_time(k, i, j);
                if (i != j && s < 1)
                    throw std::invalid_argument("off-diagonal setups must be >= 1");
            }
}

void GeneratorSpec::validate() const {
    if (machines < 1 || jobs < 1)
        throw std::invalid_argument("generator needs machines >= 1, jobs >= 1");
    if (max_setup < 1) throw std::invalid_argument("max_setup must be >= 1");
    if (proc_low < 1 || proc_low > proc_high)
        throw std::invalid_argument("need 1 <= proc_low <= proc_high");
}

Instance generate(const GeneratorSpec& spec) {
    spec.validate();
    Instance inst;
    inst.machines = spec.machines;
    inst.jobs = spec.jobs;
    inst.max_setup = spec.max_setup;
    inst.processing.resize(static_cast<std::size_t>(spec.jobs) * spec.machines);
    inst.setup.assign(
        static_cast<std::size_t>(spec.machines) * spec.jobs * spec.jobs, 0);

    for (int i = 0; i < spec.jobs; ++i)
        for (int k = 0; k < spec.machines; ++k) {
            std::uint64_t idx =
                static_cast<std::uint64_t>(i) * spec.machines + k;
            inst.processing[idx] = draw_in(spec.seed, kStreamProcessing, idx,
                                           spec.proc_low, spec.proc_high);
        }
    for (int k = 0; k < spec.machines; ++k)
        for (int i = 0; i < spec.jobs; ++i)
            for (int j = 0; j < spec.jobs; ++j) {
                if (i == j) continue;
                std::uint64_t idx =
                    (static_cast<std::uint64_t>(k) * spec.jobs + i) * spec.jobs +
                    j;
                inst.setup[idx] =
                    draw_in(spec.seed, kStreamSetup, idx, 1, spec.max_setup);
            }
    return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
    out << inst.jobs << ' ' << inst.machines << ' ' << inst.max_setup << '\n';
    for (int i = 0; i < inst.jobs; ++i) {
        for (int k = 0; k < inst.machines; ++k) {
            if (k) out << ' ';
            out << inst.proc(i, k);
        }
        out << '\n';
    }
    for (int k = 0; k < inst.machines; ++k) {
        out << '\n';
        for (int i = 0; i < inst.jobs; ++i) {
            for (int j = 0; j < inst.jobs; ++j) {
                if (j) out << ' ';
                out << inst.setup_time(k, i, j);
            }
            out << '\n';
        }
    }
}

void write_instance_file(const Instance& inst,
                         const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    write_instance(inst, out);
}

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next non-empty-or-not line depending on caller; returns false at EOF.
    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("parse error at line " + std::to_string(line_no) +
                         ": expected " + expected);
    }
};

std::vector<Time> parse_ints(LineReader& r, const std::string& line, int count,
                             const std::string& what) {
    std::istringstream ss(line);
    std::vector<Time> vals;
    Time v;
    while (ss >> v) vals.push_back(v);
    if (static_cast<int>(vals.size()) != count)
        r.fail(std::to_string(count) + " integers (" + what + ")");
    return vals;
}

}  // namespace

Instance read_instance(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) r.fail("header line `n m S`");
    auto header = parse_ints(r, line, 3, "header n m S");
    Instance inst;
    inst.jobs = static_cast<int>(header[0]);
    inst.machines = static_cast<int>(header[1]);
    inst.max_setup = header[2];
    if (inst.jobs < 1 || inst.machines < 1 || inst.max_setup < 1)
        r.fail("positive n, m, S");

    inst.processing.resize(static_cast<std::size_t>(inst.jobs) *
                           inst.machines);
    for (int i = 0; i < inst.jobs; ++i) {
        if (!r.next(line)) r.fail("processing row for job " + std::to_string(i + 1));
        auto row = parse_ints(r, line, inst.machines,
                              "processing row for job " + std::to_string(i + 1));
        for (int k = 0; k < inst.machines; ++k) {
            if (row[k] < 1) r.fail("positive processing times");
            inst.processing[static_cast<std::size_t>(i) * inst.machines + k] =
                row[k];
        }
    }

    inst.setup.assign(
        static_cast<std::size_t>(inst.machines) * inst.jobs * inst.jobs, 0);
    for (int k = 0; k < inst.machines; ++k) {
        if (!r.next(line) || !line.empty())
            r.fail("blank line before setup block of machine " +
                   std::to_string(k + 1));
        for (int i = 0; i < inst.jobs; ++i) {
            if (!r.next(line))
                r.fail("setup row " + std::to_string(i + 1) +
                       " of machine " + std::to_string(k + 1));
            auto row = parse_ints(r, line, inst.jobs,
                                  "setup row " + std::to_string(i + 1) +
                                      " of machine " + std::to_string(k + 1));
            for (int j = 0; j < inst.jobs; ++j) {
                if (i == j) {
                    // diagonal is stored but never read; accept any value,
                    // normalise to 0
                    continue;
                }
                if (row[j] < 1) r.fail("positive off-diagonal setup times");
                inst.setup[(static_cast<std::size_t>(k) * inst.jobs + i) *
                               inst.jobs +
                           j] = row[j];
            }
        }
    }
    inst.validate();
    return inst;
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    return read_instance(in);
}

}  // namespace upmsp
