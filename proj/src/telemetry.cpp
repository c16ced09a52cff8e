#include "upmsp/telemetry.hpp"

#include <limits>

#include <json.hpp>

namespace upmsp {

NeighbourhoodStats stats_from_deltas(Neighbourhood id,
                                     const std::vector<double>& deltas) {
    NeighbourhoodStats st;
    st.id = id;
    st.size = static_cast<long long>(deltas.size());
    if (st.size == 0) return st;

    double best = -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double sum_improving = 0.0;
    for (double delta : deltas) {
        best = std::max(best, delta);
        worst = std::min(worst, delta);
        sum += delta;
        if (delta > 0.0) {
            ++st.improving;
            sum_improving += delta;
        }
    }
    st.pi = static_cast<double>(st.improving) / static_cast<double>(st.size);
    st.delta_best = best;
    st.delta_mean = sum / static_cast<double>(st.size);
    st.delta_worst = worst;
    if (st.improving > 0)
        st.expected_improvement =
            sum_improving / static_cast<double>(st.improving);
    st.expected_utility = sum_improving / static_cast<double>(st.size);
    return st;
}

NeighbourhoodStats census_one(const Instance& inst, const Solution& sol,
                              Neighbourhood id) {
    std::vector<double> deltas;
    deltas.reserve(static_cast<std::size_t>(cardinality(id, sol)));
    double fx = static_cast<double>(sol.cmax);
    for_each_move(id, sol, [&](const Move& move) {
        Time nc = neighbour_cmax(inst, sol, move);
        deltas.push_back((fx - static_cast<double>(nc)) / fx);
    });
    return stats_from_deltas(id, deltas);
}

std::array<NeighbourhoodStats, kNumNeighbourhoods> census(const Instance& inst,
                                                          const Solution& sol) {
    std::array<NeighbourhoodStats, kNumNeighbourhoods> out;
    for (int i = 0; i < kNumNeighbourhoods; ++i)
        out[i] = census_one(inst, sol, kAllNeighbourhoods[i]);
    return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::optional<double> opt_from_json(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

}  // namespace

std::string event_to_json_line(const EnumerationEvent& event) {
    ordered_json j;
    j["run_id"] = event.run_id;
    j["M"] = event.M;
    j["J"] = event.J;
    j["S"] = event.S;
    j["iteration"] = event.iteration;
    j["elapsed_ms"] = event.elapsed_ms;
    j["t"] = event.t;
    j["cmax"] = event.cmax;
    j["spt"] = event.spt;
    j["sum_completion"] = event.sum_completion;
    ordered_json stats = ordered_json::array();
    for (const auto& st : event.stats) {
        ordered_json s;
        s["id"] = name_of(st.id);
        s["size"] = st.size;
        s["improving"] = st.improving;
        s["pi"] = st.pi;
        s["delta_best"] = opt_to_json(st.delta_best);
        s["delta_mean"] = opt_to_json(st.delta_mean);
        s["delta_worst"] = opt_to_json(st.delta_worst);
        s["expected_improvement"] = opt_to_json(st.expected_improvement);
        s["expected_utility"] = st.expected_utility;
        stats.push_back(std::move(s));
    }
    j["stats"] = std::move(stats);
    return j.dump();
}

EnumerationEvent event_from_json_line(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    EnumerationEvent e;
    e.run_id = j.at("run_id").get<std::string>();
    e.M = j.at("M").get<int>();
    e.J = j.at("J").get<int>();
    e.S = j.at("S").get<Time>();
    e.iteration = j.at("iteration").get<long long>();
    e.elapsed_ms = j.at("elapsed_ms").get<long long>();
    e.t = j.at("t").get<double>();
    e.cmax = j.at("cmax").get<Time>();
    e.spt = j.at("spt").get<Time>();
    e.sum_completion = j.at("sum_completion").get<Time>();
    const auto& stats = j.at("stats");
    if (stats.size() != kNumNeighbourhoods)
        throw ParseError("event needs exactly 6 neighbourhood stats");
    for (std::size_t i = 0; i < kNumNeighbourhoods; ++i) {
        const auto& s = stats[i];
        NeighbourhoodStats st;
        auto id = neighbourhood_from_name(s.at("id").get<std::string>());
        if (!id) throw ParseError("unknown neighbourhood id in event");
        st.id = *id;
        st.size = s.at("size").get<long long>();
        st.improving = s.at("improving").get<long long>();
        st.pi = s.at("pi").get<double>();
        st.delta_best = opt_from_json(s.at("delta_best"));
        st.delta_mean = opt_from_json(s.at("delta_mean"));
        st.delta_worst = opt_from_json(s.at("delta_worst"));
        st.expected_improvement = opt_from_json(s.at("expected_improvement"));
        st.expected_utility = s.at("expected_utility").get<double>();
        e.stats[i] = st;
    }
    return e;
}

std::vector<EnumerationEvent> read_events_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open telemetry file: " + path.string());
    std::vector<EnumerationEvent> events;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        events.push_back(event_from_json_line(line));
    }
    return events;
}

TelemetrySink::TelemetrySink(const std::filesystem::path& path,
                             long long every_k)
    : out_(path), every_k_(every_k < 1 ? 1 : every_k) {
    if (!out_)
        throw std::runtime_error("cannot open telemetry sink: " +
                                 path.string());
}

bool TelemetrySink::due_next_change() {
    ++changes_seen_;
    return changes_seen_ % every_k_ == 0;
}

void TelemetrySink::record(const EnumerationEvent& event) {
    out_ << event_to_json_line(event) << '\n';
    if (!out_)
        throw std::runtime_error("telemetry sink write failed");
    ++recorded_;
}

}  // namespace upmsp
