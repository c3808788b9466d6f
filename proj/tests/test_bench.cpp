#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pcx/bench.hpp"

using pcx::BoxRegion;
using pcx::Expression;
using pcx::TestInstance;

TEST_CASE("registry holds the twelve fixed instances") {
    CHECK(pcx::registry().size() == 12);
}

TEST_CASE("Rastrigin registry entry") {
    auto inst = pcx::find_instance("Rastrigin");
    REQUIRE(inst.has_value());
    CHECK(inst->box.lo == std::vector<double>{-5.12, -5.12});
    CHECK(inst->box.hi == std::vector<double>{5.12, 5.12});
    CHECK(inst->known_min_value == 0.0);
    CHECK(inst->expected_count == 1);
}

TEST_CASE("TestDim_3 is synthesized on demand") {
    auto inst = pcx::find_instance("TestDim_3");
    REQUIRE(inst.has_value());
    CHECK(inst->dimension == 3);
    CHECK(inst->box.lo == std::vector<double>{-0.25, -0.25, -0.25});
    CHECK(inst->box.hi == std::vector<double>{0.25, 0.25, 0.25});
    CHECK(inst->expected_count == 8);
    CHECK(inst->known_minimizers.size() == 8);
    for (const auto& m : inst->known_minimizers)
        for (double c : m) CHECK(std::fabs(c) == doctest::Approx(0.25));
}

TEST_CASE("Shubert registry entry") {
    auto inst = pcx::find_instance("Shubert");
    REQUIRE(inst.has_value());
    CHECK(inst->expected_count == 18);
    CHECK(inst->known_minimizers.size() == 18);
    CHECK(inst->known_min_value == doctest::Approx(-186.730909).epsilon(1e-6));
}

TEST_CASE("unknown names yield no instance") {
    CHECK_FALSE(pcx::find_instance("NoSuchProblem").has_value());
    CHECK_FALSE(pcx::find_instance("TestDim_x").has_value());
    CHECK_FALSE(pcx::find_instance("TestDim_").has_value());
    CHECK_FALSE(pcx::find_instance("TestDim_0").has_value());
}

TEST_CASE("fixture self-check: minimizers attain the recorded minimum") {
    auto check = [](const TestInstance& inst) {
        auto f = Expression::parse(inst.formula, inst.dimension);
        for (const auto& m : inst.known_minimizers) {
            CHECK(inst.box.contains(m, 1e-9));
            CHECK(f.evaluate(m) <= inst.known_min_value + 1e-9);
        }
    };
    for (const TestInstance& inst : pcx::registry()) check(inst);
    for (int d = 2; d <= 5; ++d) check(*pcx::find_instance("TestDim_" + std::to_string(d)));
}

TEST_CASE("grid oracle agrees with the recorded minima") {
    for (const TestInstance& inst : pcx::registry()) {
        if (inst.dimension != 2) continue;
        auto f = Expression::parse(inst.formula, inst.dimension);
        double best = std::numeric_limits<double>::infinity();
        const int n = 301;  // the full 1001-point sweep lives in acceptance
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<double> x{
                    inst.box.lo[0] + inst.box.width(0) * i / (n - 1),
                    inst.box.lo[1] + inst.box.width(1) * j / (n - 1)};
                best = std::min(best, f.evaluate(x));
            }
        CHECK(best >= inst.known_min_value - 1e-3);
    }
}

TEST_CASE("run_suite over an empty name list is empty") {
    CHECK(pcx::run_suite({}, pcx::SolverConfig{}).empty());
}

TEST_CASE("run_suite rejects unknown names") {
    CHECK_THROWS_AS(pcx::run_suite({"NoSuchProblem"}, pcx::SolverConfig{}),
                    std::invalid_argument);
}

TEST_CASE("run_suite rows and CSV shape") {
    auto rows = pcx::run_suite({"TestDim_2"}, pcx::SolverConfig{});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].name == "TestDim_2");
    CHECK(rows[0].n_eps == 4);
    CHECK(rows[0].flag_ter == 0);
    CHECK(rows[0].f_min <= 1e-3);

    std::string csv = pcx::suite_csv(rows);
    CHECK(csv.rfind("name,iter,wall_ms,n_eps,flag_ter,f_min\n", 0) == 0);
    CHECK(csv.find("TestDim_2,") != std::string::npos);
}

TEST_CASE("subdivision SVG for a single-box convex run") {
    auto f = Expression::parse("x1^2 + x2^2", 2);
    BoxRegion box{{-1, -1}, {1, 1}};
    auto report = pcx::solve(f, box, pcx::SolverConfig{}, /*keep_boxes=*/true);
    std::ostringstream out;
    pcx::emit_subdivision_svg(report, box, out);
    std::string svg = out.str();
    // one background rect, one box rect, one star marker
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t rects = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1))
        ++rects;
    CHECK(rects == 2);
    CHECK(svg.find("<polygon") != std::string::npos);

    // deterministic output
    std::ostringstream again;
    pcx::emit_subdivision_svg(report, box, again);
    CHECK(again.str() == svg);
}

TEST_CASE("subdivision SVG rejects non-2-D domains") {
    pcx::RunReport report;
    report.has_boxes = true;
    BoxRegion cube{{0, 0, 0}, {1, 1, 1}};
    std::ostringstream out;
    CHECK_THROWS_AS(pcx::emit_subdivision_svg(report, cube, out),
                    std::invalid_argument);
}

TEST_CASE("subdivision SVG requires box lists") {
    pcx::RunReport report;  // has_boxes = false
    BoxRegion box{{0, 0}, {1, 1}};
    std::ostringstream out;
    CHECK_THROWS_AS(pcx::emit_subdivision_svg(report, box, out),
                    std::invalid_argument);
}
