#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "helpers.hpp"
#include "upmsp/sa.hpp"

using namespace upmsp;

TEST_CASE("selection probabilities: uniform weights give exactly 1/6") {
    std::array<double, 6> w;
    w.fill(1.0 / 6.0);
    for (double p_max : {1.0 / 6.0, 0.3, 0.5, 0.9}) {
        auto p = selection_probabilities(w, p_max);
        for (double pi : p) CHECK(pi == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("selection probabilities: degenerate weight hits p_max") {
    std::array<double, 6> w = {1, 0, 0, 0, 0, 0};
    auto p = selection_probabilities(w, 0.5);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));
    for (int i = 1; i < 6; ++i)
        CHECK(p[i] == doctest::Approx(0.1).epsilon(1e-15));
    double sum = 0;
    for (double pi : p) sum += pi;
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("selection probabilities: simplex, cap and floor on random weights") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 10000; ++trial) {
        std::array<double, 6> w;
        double total = 0;
        for (auto& wi : w) {
            wi = -std::log(1.0 - rng.next_unit());
            total += wi;
        }
        for (auto& wi : w) wi /= total;
        double p_max = 1.0 / 6.0 + rng.next_unit() * (0.95 - 1.0 / 6.0);
        auto p = selection_probabilities(w, p_max);
        double sum = 0;
        for (double pi : p) sum += pi;
        CHECK(std::abs(sum - 1.0) < 1e-12);
        double floor = (1.0 - p_max) / 5.0;
        for (double pi : p) {
            CHECK(pi >= floor - 1e-12);
            CHECK(pi <= p_max + 1e-12);
        }
    }
}

TEST_CASE("initial solution: single machine keeps insertion order") {
    GeneratorSpec spec{.machines = 1, .jobs = 6, .max_setup = 9, .seed = 10};
    Instance inst = generate(spec);
    SplitMix64 rng(3);
    Solution sol = initial_solution(inst, rng);
    CHECK(sol.seq[0].size() == 6);
    CHECK_NOTHROW(make_solution(inst, sol.seq));
}

TEST_CASE("initial solution: machine-favoured jobs land alone") {
    Instance inst;
    inst.machines = 3;
    inst.jobs = 3;
    inst.max_setup = 1;
    inst.processing.assign(9, 1000);
    for (int j = 0; j < 3; ++j)
        inst.processing[static_cast<std::size_t>(j) * 3 + j] = 1;
    inst.setup.assign(27, 1);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) inst.setup[(k * 3 + i) * 3 + i] = 0;

    SplitMix64 rng(5);
    Solution sol = initial_solution(inst, rng);
    CHECK(sol.cmax == 1);
    CHECK(sol.cmax == exhaustive_optimum(inst));
}

TEST_CASE("SA run is deterministic and monotone in best-so-far") {
    GeneratorSpec spec{.machines = 2, .jobs = 8, .max_setup = 9, .seed = 20};
    Instance inst = generate(spec);
    SAConfig config;
    config.seed = 99;
    config.max_iters = 20000;
    config.budget_ms = 0;

    auto r1 = run_sa(inst, config);
    auto r2 = run_sa(inst, config);
    CHECK(r1.best.seq == r2.best.seq);
    CHECK(r1.best_cmax == r2.best_cmax);
    CHECK(r1.iterations == r2.iterations);
    CHECK(r1.selections == r2.selections);
    CHECK(r1.best_cmax <= exhaustive_optimum(inst) * 2);  // sanity
}

TEST_CASE("uniform policy selects each neighbourhood about 1/6 of the time") {
    GeneratorSpec spec{.machines = 4, .jobs = 20, .max_setup = 9, .seed = 30};
    Instance inst = generate(spec);
    SAConfig config;
    config.seed = 7;
    config.max_iters = 60000;
    config.budget_ms = 0;
    config.initial_temperature = 1e9;  // keep the walk wild, all loads busy

    auto r = run_sa(inst, config);
    long long total = 0;
    for (long long s : r.selections) total += s;
    REQUIRE(total > 59000);
    double p = 1.0 / 6.0;
    double se = std::sqrt(p * (1 - p) / static_cast<double>(total));
    for (long long s : r.selections) {
        double f = static_cast<double>(s) / static_cast<double>(total);
        CHECK(std::abs(f - p) < 4 * se);
    }
}

TEST_CASE("tiny instances reach the exhaustive optimum in most runs") {
    int hits = 0;
    const int runs = 10;
    for (int i = 0; i < runs; ++i) {
        GeneratorSpec spec{.machines = 2,
                           .jobs = 6,
                           .max_setup = 9,
                           .seed = 1000 + static_cast<std::uint64_t>(i)};
        Instance inst = generate(spec);
        Time opt = exhaustive_optimum(inst);
        SAConfig config;
        config.seed = 5000 + static_cast<std::uint64_t>(i);
        config.max_iters = 60000;
        config.budget_ms = 0;
        auto r = run_sa(inst, config);
        REQUIRE(r.best_cmax >= opt);
        if (r.best_cmax == opt) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("adaptive policy without models is a configuration error") {
    GeneratorSpec spec{.machines = 2, .jobs = 6, .max_setup = 9, .seed = 2};
    Instance inst = generate(spec);
    SAConfig config;
    config.policy = PolicyKind::Adaptive;
    CHECK_THROWS_AS(run_sa(inst, config), std::invalid_argument);
}

TEST_CASE("adaptive policy runs and records telemetry") {
    GeneratorSpec spec{.machines = 2, .jobs = 8, .max_setup = 9, .seed = 3};
    Instance inst = generate(spec);

    std::array<UtilityModel, kNumNeighbourhoods> models;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        models[i].id = kAllNeighbourhoods[i];
        models[i].beta[4] = -0.5;  // utility decays with t
    }

    auto path = std::filesystem::temp_directory_path() / "upmsp_sa_test.jsonl";
    {
        TelemetrySink sink(path, 5);
        SAConfig config;
        config.policy = PolicyKind::Adaptive;
        config.p_max = 0.4;
        config.seed = 4;
        config.max_iters = 5000;
        config.budget_ms = 0;
        auto r = run_sa(inst, config, &models, &sink, "adaptive-test");
        CHECK(r.incumbent_changes > 0);
        CHECK(sink.recorded() > 0);
        CHECK(sink.recorded() <= (r.incumbent_changes + 4) / 5);
    }
    auto events = read_events_file(path);
    CHECK(!events.empty());
    long long prev_iter = -1;
    for (const auto& e : events) {
        CHECK(e.run_id == "adaptive-test");
        CHECK(e.t > 0.0);
        CHECK(e.t <= 1.0);
        CHECK(e.iteration > prev_iter);
        prev_iter = e.iteration;
    }
    std::filesystem::remove(path);
}

TEST_CASE("config validation") {
    SAConfig config;
    config.alpha = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.alpha = 0.9;
    config.budget_ms = 0;
    config.max_iters = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.max_iters = 10;
    config.policy = PolicyKind::Adaptive;
    config.p_max = 0.05;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
