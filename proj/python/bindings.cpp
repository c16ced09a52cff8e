#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "upmsp/instance.hpp"
#include "upmsp/neighbourhoods.hpp"
#include "upmsp/regression.hpp"
#include "upmsp/rng.hpp"
#include "upmsp/sa.hpp"
#include "upmsp/solution.hpp"
#include "upmsp/telemetry.hpp"

namespace py = pybind11;
using namespace upmsp;

PYBIND11_MODULE(_upmsp, m) {
    m.doc() = "Unrelated parallel machine scheduling with sequence-dependent "
              "setups: instances, neighbourhoods, SA, utility telemetry.";

    py::enum_<Neighbourhood>(m, "Neighbourhood")
        .value("SHIFT", Neighbourhood::Shift)
        .value("SWITCH", Neighbourhood::Switch)
        .value("TASK_MOVE", Neighbourhood::TaskMove)
        .value("SWAP", Neighbourhood::Swap)
        .value("DIRECT_SWAP", Neighbourhood::DirectSwap)
        .value("TWO_SHIFT", Neighbourhood::TwoShift);
    m.def("name_of", &name_of);
    m.def("neighbourhood_from_name", &neighbourhood_from_name);

    py::class_<Instance>(m, "Instance")
        .def_readonly("machines", &Instance::machines)
        .def_readonly("jobs", &Instance::jobs)
        .def_readonly("max_setup", &Instance::max_setup)
        .def("proc", &Instance::proc, py::arg("job"), py::arg("machine"))
        .def("setup_time", &Instance::setup_time, py::arg("machine"),
             py::arg("from_job"), py::arg("to_job"));

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init([](int machines, int jobs, Time max_setup, Time proc_low,
                         Time proc_high, std::uint64_t seed) {
                 return GeneratorSpec{machines, jobs,      max_setup,
                                      proc_low, proc_high, seed};
             }),
             py::arg("machines"), py::arg("jobs"), py::arg("max_setup") = 9,
             py::arg("proc_low") = 1, py::arg("proc_high") = 99,
             py::arg("seed") = 0);
    m.def("generate", &generate);
    m.def("read_instance_file", &read_instance_file);
    m.def("write_instance_file", &write_instance_file);

    py::class_<Solution>(m, "Solution")
        .def_readonly("seq", &Solution::seq)
        .def_readonly("completion", &Solution::completion)
        .def_readonly("cmax", &Solution::cmax)
        .def_readonly("spt", &Solution::spt)
        .def_readonly("makespan_machine", &Solution::makespan_machine);
    m.def("make_solution", &make_solution);
    m.def("evaluate_machine",
          [](const Instance& inst, const std::vector<int>& sequence,
             int machine) { return evaluate_machine(inst, sequence, machine); });
    m.def("sum_completions", &sum_completions);

    py::class_<Move>(m, "Move")
        .def_readonly("kind", &Move::kind)
        .def_readonly("a", &Move::a)
        .def_readonly("b", &Move::b)
        .def_readonly("c", &Move::c)
        .def_readonly("d", &Move::d);
    m.def("cardinality", &cardinality);
    m.def("move_at", &move_at);
    m.def("moves", [](Neighbourhood id, const Solution& sol) {
        std::vector<Move> out;
        for_each_move(id, sol, [&](const Move& mv) { out.push_back(mv); });
        return out;
    });
    m.def("neighbour_cmax", &neighbour_cmax);
    m.def(
        "apply_move",
        [](const Instance& inst, Solution& sol, const Move& mv, int anchor) {
            apply_move(inst, sol, mv, anchor);
        },
        py::arg("inst"), py::arg("sol"), py::arg("move"), py::arg("anchor") = -1);
    m.def("sample_uniform",
          [](Neighbourhood id, const Solution& sol, std::uint64_t seed) {
              SplitMix64 rng(seed);
              return sample_uniform(id, sol, rng);
          });

    py::class_<NeighbourhoodStats>(m, "NeighbourhoodStats")
        .def_readonly("id", &NeighbourhoodStats::id)
        .def_readonly("size", &NeighbourhoodStats::size)
        .def_readonly("improving", &NeighbourhoodStats::improving)
        .def_readonly("pi", &NeighbourhoodStats::pi)
        .def_readonly("delta_best", &NeighbourhoodStats::delta_best)
        .def_readonly("delta_mean", &NeighbourhoodStats::delta_mean)
        .def_readonly("delta_worst", &NeighbourhoodStats::delta_worst)
        .def_readonly("expected_improvement",
                      &NeighbourhoodStats::expected_improvement)
        .def_readonly("expected_utility", &NeighbourhoodStats::expected_utility);
    m.def("census_one", &census_one);
    m.def("census", &census);
    m.def("read_events_file", &read_events_file);

    py::class_<EnumerationEvent>(m, "EnumerationEvent")
        .def_readonly("run_id", &EnumerationEvent::run_id)
        .def_readonly("M", &EnumerationEvent::M)
        .def_readonly("J", &EnumerationEvent::J)
        .def_readonly("S", &EnumerationEvent::S)
        .def_readonly("iteration", &EnumerationEvent::iteration)
        .def_readonly("t", &EnumerationEvent::t)
        .def_readonly("cmax", &EnumerationEvent::cmax)
        .def_readonly("spt", &EnumerationEvent::spt)
        .def_readonly("stats", &EnumerationEvent::stats);

    py::class_<UtilityModel>(m, "UtilityModel")
        .def_readonly("id", &UtilityModel::id)
        .def_readonly("beta", &UtilityModel::beta)
        .def_readonly("rows", &UtilityModel::rows)
        .def_readonly("rss", &UtilityModel::rss)
        .def_readonly("r2", &UtilityModel::r2)
        .def_readonly("dropped_terms", &UtilityModel::dropped_terms);
    py::enum_<RankPolicy>(m, "RankPolicy")
        .value("STRICT", RankPolicy::Strict)
        .value("DROP_DEPENDENT", RankPolicy::DropDependent);
    m.def("design_row", &design_row);
    m.def(
        "fit_from_events",
        [](const std::vector<EnumerationEvent>& events, Neighbourhood id,
           RankPolicy policy) {
            return fit_ols(build_design(events, id), id, policy);
        },
        py::arg("events"), py::arg("id"),
        py::arg("policy") = RankPolicy::Strict);
    m.def("predict_log_utility", &predict_log_utility);
    m.def("save_models", &save_models);
    m.def("load_models", &load_models);

    py::enum_<PolicyKind>(m, "PolicyKind")
        .value("UNIFORM", PolicyKind::Uniform)
        .value("ADAPTIVE", PolicyKind::Adaptive);
    py::class_<SAConfig>(m, "SAConfig")
        .def(py::init<>())
        .def_readwrite("initial_temperature", &SAConfig::initial_temperature)
        .def_readwrite("alpha", &SAConfig::alpha)
        .def_readwrite("plateau", &SAConfig::plateau)
        .def_readwrite("budget_ms", &SAConfig::budget_ms)
        .def_readwrite("max_iters", &SAConfig::max_iters)
        .def_readwrite("seed", &SAConfig::seed)
        .def_readwrite("policy", &SAConfig::policy)
        .def_readwrite("p_max", &SAConfig::p_max)
        .def_readwrite("census_every", &SAConfig::census_every);
    py::class_<SAResult>(m, "SAResult")
        .def_readonly("best", &SAResult::best)
        .def_readonly("best_cmax", &SAResult::best_cmax)
        .def_readonly("iterations", &SAResult::iterations)
        .def_readonly("elapsed_ms", &SAResult::elapsed_ms)
        .def_readonly("incumbent_changes", &SAResult::incumbent_changes)
        .def_readonly("accepted", &SAResult::accepted)
        .def_readonly("selections", &SAResult::selections)
        .def_readonly("initial_temperature", &SAResult::initial_temperature)
        .def_readonly("final_temperature", &SAResult::final_temperature);
    m.def("selection_probabilities", &selection_probabilities);
    m.def(
        "run_sa",
        [](const Instance& inst, const SAConfig& config,
           std::optional<std::array<UtilityModel, kNumNeighbourhoods>> models,
           std::optional<std::filesystem::path> telemetry, long long every_k,
           const std::string& run_id) {
            std::optional<TelemetrySink> sink;
            if (telemetry) sink.emplace(*telemetry, every_k);
            return run_sa(inst, config, models ? &*models : nullptr,
                          sink ? &*sink : nullptr, run_id);
        },
        py::arg("inst"), py::arg("config"), py::arg("models") = py::none(),
        py::arg("telemetry") = py::none(), py::arg("every_k") = 1,
        py::arg("run_id") = "run");
    m.def("exhaustive_optimum", &exhaustive_optimum);
}
