// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is independent; all are always evaluated.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pcx/bench.hpp"
#include "pcx/bnb.hpp"
#include "pcx/interval.hpp"
#include "pcx/relaxation.hpp"
#include "test_util.hpp"

using pcx::BoxRegion;
using pcx::Expression;
using pcx::RunReport;
using pcx::SolverConfig;
using pcx::SymbolicDerivatives;
using pcx::TestInstance;

namespace {

struct InstanceRun {
    TestInstance instance;
    RunReport report;
};

int g_failures = 0;

void report(int criterion, const char* title, bool ok,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                title, detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

double nearest_fixture(const std::vector<double>& x,
                       const std::vector<std::vector<double>>& fixtures) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : fixtures) best = std::min(best, dist(x, m));
    return best;
}

InstanceRun run_instance(const std::string& name) {
    auto inst = pcx::find_instance(name);
    if (!inst) throw std::runtime_error("missing instance " + name);
    Expression f = Expression::parse(inst->formula, inst->dimension);
    RunReport rep = pcx::solve(f, inst->box, SolverConfig{});
    return {std::move(*inst), std::move(rep)};
}

bool count_ok(const InstanceRun& run) {
    auto n = run.report.clusters.size();
    if (run.instance.name == "Branin") return n == 2 || n == 3;
    return run.instance.expected_count &&
           n == static_cast<std::size_t>(*run.instance.expected_count);
}

bool domain_safe(const TestInstance& inst, const BoxRegion& box) {
    if (inst.name != "Vincent") return true;
    return box.lo[0] > 1e-6 && box.lo[1] > 1e-6;
}

double grid_min(const Expression& f, const BoxRegion& box, int n) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> x(2);
    for (int i = 0; i < n; ++i) {
        x[0] = box.lo[0] + box.width(0) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            x[1] = box.lo[1] + box.width(1) * j / (n - 1);
            best = std::min(best, f.evaluate(x));
        }
    }
    return best;
}

}  // namespace

int main() {
    const std::vector<std::string> finite_names{
        "Rastrigin", "6-Hump", "Branin",  "Himmelblau",
        "Rastrigin mod", "Shubert", "Deb 1", "Vincent"};
    const std::vector<std::string> infinite_names{"Test01", "Test02", "Test03",
                                                  "Test04"};

    std::vector<InstanceRun> finite, infinite, highdim;
    for (const auto& name : finite_names) finite.push_back(run_instance(name));
    for (const auto& name : infinite_names)
        infinite.push_back(run_instance(name));
    for (int d = 2; d <= 5; ++d)
        highdim.push_back(run_instance("TestDim_" + std::to_string(d)));

    // 1. Finite-optima cluster counts (Branin accepts 2 or 3).
    {
        bool ok = true;
        std::string detail;
        for (const InstanceRun& run : finite) {
            if (!count_ok(run)) ok = false;
            if (!detail.empty()) detail += ", ";
            detail += run.instance.name + "=" +
                      std::to_string(run.report.clusters.size());
        }
        report(1, "finite-optima counts", ok, detail);
    }

    // 2. Solution quality: value within 1e-3 of the known minimum and each
    //    cluster representative within 1e-2 of a fixture minimizer.
    {
        bool ok = true;
        std::string detail;
        for (const InstanceRun& run : finite) {
            Expression f =
                Expression::parse(run.instance.formula, run.instance.dimension);
            for (const auto& p : run.report.solutions)
                if (f.evaluate(p.x) > run.instance.known_min_value + 1e-3) {
                    ok = false;
                    detail = run.instance.name + " value overshoot";
                }
            for (const auto& p : run.report.clusters)
                if (nearest_fixture(p.x, run.instance.known_minimizers) >
                    1e-2) {
                    ok = false;
                    detail = run.instance.name + " off-fixture representative";
                }
        }
        report(2, "solution quality on finite instances", ok, detail);
    }

    // 3. High-dimensional counts: TestDim_d gives 2^d clusters, flag_ter 0,
    //    every point near a +-1/4 sign pattern.
    {
        bool ok = true;
        std::string detail;
        for (const InstanceRun& run : highdim) {
            bool this_ok =
                run.report.clusters.size() ==
                    static_cast<std::size_t>(*run.instance.expected_count) &&
                run.report.flag_ter == 0;
            for (const auto& p : run.report.solutions)
                if (nearest_fixture(p.x, run.instance.known_minimizers) > 1e-2)
                    this_ok = false;
            if (!this_ok) ok = false;
            if (!detail.empty()) detail += ", ";
            detail += run.instance.name + "=" +
                      std::to_string(run.report.clusters.size());
        }
        report(3, "high-dimensional counts", ok, detail);
    }

    // 4. Infinite-solution-set instances: many clusters, tiny values, flag 0.
    {
        bool ok = true;
        std::string detail;
        for (const InstanceRun& run : infinite) {
            Expression f =
                Expression::parse(run.instance.formula, run.instance.dimension);
            bool this_ok =
                run.report.clusters.size() > 50 && run.report.flag_ter == 0;
            for (const auto& p : run.report.solutions)
                if (f.evaluate(p.x) > 1e-3) this_ok = false;
            if (!this_ok) ok = false;
            if (!detail.empty()) detail += ", ";
            detail += run.instance.name + "=" +
                      std::to_string(run.report.clusters.size());
        }
        report(4, "infinite-solution-set instances", ok, detail);
    }

    // 5. Termination within the iteration and wall-clock budgets.
    {
        bool ok = true;
        std::string detail;
        for (const std::vector<InstanceRun>* runs :
             {&finite, &infinite, &highdim})
            for (const InstanceRun& run : *runs) {
                if (run.report.iterations >= 1'000'000 ||
                    run.report.wall_ms > 600'000.0) {
                    ok = false;
                    detail = run.instance.name + " over budget";
                }
            }
        report(5, "termination within budget", ok, detail);
    }

    // 6. Relaxation property suite: 100 random sub-boxes per function.
    {
        bool ok = true;
        std::string detail;
        std::mt19937 rng(6001);
        for (const TestInstance& inst : pcx::registry()) {
            SymbolicDerivatives d(
                Expression::parse(inst.formula, inst.dimension));
            int boxes = 0;
            while (boxes < 100 && ok) {
                BoxRegion box = pcx::test::random_subbox(inst.box, rng);
                if (!domain_safe(inst, box)) continue;
                ++boxes;
                auto cert = pcx::compute_alpha(
                    pcx::hessian_interval_bounds(d, box), box);
                if (cert.lambda_tilde >= 0.0)
                    for (double a : cert.alpha)
                        if (a != 0.0) ok = false;
                double sep = pcx::separation_distance(box, cert.alpha);
                for (int s = 0; s < 1000 && ok; ++s) {
                    auto x = pcx::test::random_point(box, rng);
                    double fx = d.evaluate(x);
                    double Fx = pcx::relaxed_value(d.function(), box,
                                                   cert.alpha, x);
                    if (Fx > fx + 1e-9 || fx - Fx > sep + 1e-9) ok = false;
                    auto h = pcx::test::hessian_at(d, x);
                    for (int i = 0; i < 2; ++i)
                        h[static_cast<std::size_t>(i * 2 + i)] +=
                            2.0 * cert.alpha[static_cast<std::size_t>(i)];
                    if (pcx::test::min_eigenvalue(h, 2) < -1e-6) ok = false;
                }
                for (double cx : {box.lo[0], box.hi[0]})
                    for (double cy : {box.lo[1], box.hi[1]}) {
                        std::vector<double> c{cx, cy};
                        if (std::fabs(pcx::relaxed_value(d.function(), box,
                                                         cert.alpha, c) -
                                      d.evaluate(c)) >
                            1e-9 * (1.0 + std::fabs(d.evaluate(c))))
                            ok = false;
                    }
                auto mid = box.midpoint();
                double gap = d.evaluate(mid) -
                             pcx::relaxed_value(d.function(), box, cert.alpha,
                                                mid);
                if (std::fabs(gap - sep) > 1e-9 * (1.0 + sep)) ok = false;
                BoxRegion inner = pcx::test::random_subbox(box, rng);
                if (domain_safe(inst, inner) &&
                    pcx::lambda_tilde(pcx::hessian_interval_bounds(d, inner),
                                      2) < cert.lambda_tilde - 1e-12)
                    ok = false;
                if (!ok) detail = inst.name;
            }
            if (!ok) break;
        }
        report(6, "relaxation property suite", ok, detail);
    }

    // 7. Interval containment fuzz: 1e5 random checks.
    {
        long violations = 0;
        long done = 0;
        std::mt19937 rng(7001);
        const auto& reg = pcx::registry();
        std::vector<Expression> parsed;
        for (const TestInstance& inst : reg)
            parsed.push_back(Expression::parse(inst.formula, inst.dimension));
        std::uniform_int_distribution<std::size_t> pick(0, reg.size() - 1);
        while (done < 100'000) {
            std::size_t k = pick(rng);
            BoxRegion box = pcx::test::random_subbox(reg[k].box, rng);
            if (!domain_safe(reg[k], box)) continue;
            pcx::Interval enc = pcx::interval_evaluate(parsed[k], box);
            for (int s = 0; s < 10 && done < 100'000; ++s, ++done) {
                auto x = pcx::test::random_point(box, rng);
                double v = parsed[k].evaluate(x);
                if (v < enc.lo - 1e-9 || v > enc.hi + 1e-9) ++violations;
            }
        }
        report(7, "interval containment fuzz (1e5 checks)", violations == 0,
               violations ? std::to_string(violations) + " violations" : "");
    }

    // 8. Convex shortcut: zero splits and the minimizer recovered directly.
    {
        bool ok = true;
        std::string detail;
        BoxRegion box{{-1, -1}, {1, 1}};
        struct Case {
            const char* formula;
            std::vector<double> minimizer;  // empty: check f-value instead
        };
        const Case cases[] = {{"x1^2 + x2^2", {0.0, 0.0}},
                              {"(x1 + x2)^2", {}},
                              {"exp(x1) + x2^2", {-1.0, 0.0}}};
        for (const Case& c : cases) {
            Expression f = Expression::parse(c.formula, 2);
            RunReport rep = pcx::solve(f, box, SolverConfig{});
            bool this_ok = rep.iterations == 0 && rep.clusters.size() == 1;
            if (this_ok) {
                const auto& x = rep.clusters[0].x;
                if (c.minimizer.empty()) {
                    // minimizer set is the line x1 = -x2; the returned point
                    // must sit on it
                    this_ok = std::fabs(x[0] + x[1]) <= 1e-6;
                } else {
                    this_ok = dist(x, c.minimizer) <= 1e-6;
                }
            }
            if (!this_ok) {
                ok = false;
                detail = c.formula;
            }
        }
        report(8, "convex shortcut (zero-split runs)", ok, detail);
    }

    // 9. Grid-oracle soundness, 1001^2 points per 2-D instance: the solver
    //    never undercuts the grid by more than 1e-3, and every returned point
    //    beats the grid up to epsilon.
    {
        bool ok = true;
        std::string detail;
        for (const std::vector<InstanceRun>* runs : {&finite, &infinite})
            for (const InstanceRun& run : *runs) {
                Expression f = Expression::parse(run.instance.formula, 2);
                double grid = grid_min(f, run.instance.box, 1001);
                bool this_ok = grid >= run.report.f_min - 1e-3;
                for (const auto& p : run.report.solutions)
                    if (f.evaluate(p.x) > grid + 1e-3) this_ok = false;
                if (!this_ok) {
                    ok = false;
                    detail = run.instance.name;
                }
            }
        report(9, "grid-oracle soundness (1001^2)", ok, detail);
    }

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
