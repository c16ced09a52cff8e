#include <doctest.h>

#include <cmath>
#include <sstream>

#include "upmsp/instance.hpp"
#include "upmsp/solution.hpp"

using namespace upmsp;

TEST_CASE("generation is deterministic under the seed") {
    GeneratorSpec spec{.machines = 3, .jobs = 8, .max_setup = 9, .seed = 42};
    Instance a = generate(spec);
    Instance b = generate(spec);
    CHECK(a.processing == b.processing);
    CHECK(a.setup == b.setup);

    spec.seed = 43;
    Instance c = generate(spec);
    CHECK(a.setup != c.setup);
}

TEST_CASE("S = 1 collapses every off-diagonal setup to 1") {
    GeneratorSpec spec{.machines = 2, .jobs = 5, .max_setup = 1, .seed = 4};
    Instance inst = generate(spec);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(inst.setup_time(k, i, j) == (i == j ? 0 : 1));
}

TEST_CASE("setup mean sits within 3 standard errors of (1+S)/2") {
    GeneratorSpec spec{.machines = 10, .jobs = 50, .max_setup = 9, .seed = 42};
    Instance inst = generate(spec);
    double sum = 0;
    long long count = 0;
    for (int k = 0; k < spec.machines; ++k)
        for (int i = 0; i < spec.jobs; ++i)
            for (int j = 0; j < spec.jobs; ++j) {
                if (i == j) continue;
                sum += static_cast<double>(inst.setup_time(k, i, j));
                ++count;
            }
    double mean = sum / static_cast<double>(count);
    double expect = (1.0 + 9.0) / 2.0;
    // discrete uniform variance (S^2 - 1) / 12
    double se = std::sqrt((9.0 * 9.0 - 1.0) / 12.0 /
                          static_cast<double>(count));
    CHECK(std::abs(mean - expect) < 3.0 * se);
}

TEST_CASE("generated instances satisfy the invariants") {
    GeneratorSpec spec{.machines = 4, .jobs = 12, .max_setup = 49, .seed = 17};
    Instance inst = generate(spec);
    CHECK_NOTHROW(inst.validate());
    for (Time p : inst.processing) {
        CHECK(p >= 1);
        CHECK(p <= 99);
    }
}

TEST_CASE("write then read round-trips") {
    GeneratorSpec spec{.machines = 3, .jobs = 5, .max_setup = 9, .seed = 1};
    Instance inst = generate(spec);
    std::stringstream ss;
    write_instance(inst, ss);
    Instance back = read_instance(ss);
    CHECK(back.jobs == inst.jobs);
    CHECK(back.machines == inst.machines);
    CHECK(back.max_setup == inst.max_setup);
    CHECK(back.processing == inst.processing);
    CHECK(back.setup == inst.setup);
}

TEST_CASE("hand-written file matches the worked 2-job example") {
    std::stringstream ss(
        "2 1 5\n"
        "3\n"
        "4\n"
        "\n"
        "0 2\n"
        "5 0\n");
    Instance inst = read_instance(ss);
    CHECK(inst.jobs == 2);
    CHECK(inst.machines == 1);
    CHECK(evaluate_machine(inst, std::vector<int>{0, 1}, 0) == 9);
    CHECK(evaluate_machine(inst, std::vector<int>{1, 0}, 0) == 12);
}

TEST_CASE("truncated setup block is reported with location") {
    std::stringstream ss(
        "2 1 5\n"
        "3\n"
        "4\n"
        "\n"
        "0 2\n");
    try {
        read_instance(ss);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("setup") != std::string::npos);
        CHECK(msg.find("line") != std::string::npos);
    }
}

TEST_CASE("malformed inputs name the offending line") {
    std::stringstream bad_header("2 1\n");
    CHECK_THROWS_AS(read_instance(bad_header), ParseError);

    std::stringstream bad_proc(
        "2 2 5\n"
        "3 4\n"
        "0 nope\n");
    CHECK_THROWS_AS(read_instance(bad_proc), ParseError);

    std::stringstream nonpositive(
        "2 1 5\n"
        "3\n"
        "-1\n");
    CHECK_THROWS_AS(read_instance(nonpositive), ParseError);
}
