#include "pcx/bench.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pcx/expression.hpp"

namespace pcx {

namespace {

BoxRegion square(double lo, double hi) { return BoxRegion{{lo, lo}, {hi, hi}}; }

std::vector<std::vector<double>> grid2(const std::vector<double>& axis) {
    std::vector<std::vector<double>> pts;
    for (double a : axis)
        for (double b : axis) pts.push_back({a, b});
    return pts;
}

std::vector<std::vector<double>> sign_patterns(double mag, int d) {
    std::vector<std::vector<double>> pts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<double> p(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            p[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? mag : -mag;
        pts.push_back(std::move(p));
    }
    return pts;
}

std::string shubert_factor(const std::string& var) {
    std::ostringstream out;
    for (int i = 1; i <= 5; ++i) {
        if (i > 1) out << " + ";
        out << i << "*cos(" << (i + 1) << "*" << var << "+" << i << ")";
    }
    return out.str();
}

std::vector<TestInstance> build_registry() {
    std::vector<TestInstance> reg;

    reg.push_back({"Rastrigin",
                   "20 + x1^2 + x2^2 - 10*(cos(2*pi*x1) + cos(2*pi*x2))", 2,
                   square(-5.12, 5.12), 0.0, {{0.0, 0.0}}, "", 1});

    reg.push_back({"6-Hump",
                   "(4 - 2.1*x1^2 + x1^4/3)*x1^2 + x1*x2 + (-4 + 4*x2^2)*x2^2",
                   2, BoxRegion{{-1.9, -1.1}, {1.9, 1.1}}, -1.031628453,
                   {{-0.089842018, 0.712656399}, {0.089842009, -0.712656408}},
                   "", 2});

    reg.push_back(
        {"Branin",
         "(x2 - 5.1/(4*pi^2)*x1^2 + 5/pi*x1 - 6)^2 + 10*(1 - 1/(8*pi))*cos(x1) + 10",
         2, BoxRegion{{-5.0, 0.0}, {10.0, 15.0}}, 0.397887358,
         {{-M_PI, 12.275}, {M_PI, 2.275}, {9.424777942, 2.475}}, "", 3});

    reg.push_back({"Himmelblau", "(x1^2 + x2 - 11)^2 + (x1 + x2^2 - 7)^2", 2,
                   square(-6.0, 6.0), 0.0,
                   {{-3.779310260, -3.283185998},
                    {-2.805118092, 3.131312513},
                    {3.0, 2.0},
                    {3.584428337, -1.848126531}},
                   "", 4});

    reg.push_back({"Rastrigin mod",
                   "20 + x1^2 + x2^2 + 10*(cos(2*pi*x1) + cos(2*pi*x2))", 2,
                   square(-5.12, 5.12), 0.497479686,
                   {{-0.497479638, -0.497479638},
                    {-0.497479639, 0.497479629},
                    {0.497479629, -0.497479639},
                    {0.497479629, 0.497479629}},
                   "", 4});

    {
        TestInstance shubert;
        shubert.name = "Shubert";
        shubert.formula =
            "(" + shubert_factor("x1") + ") * (" + shubert_factor("x2") + ")";
        shubert.dimension = 2;
        shubert.box = square(-10.0, 10.0);
        shubert.known_min_value = -186.730908831;
        shubert.known_minimizers = {
            {-7.708313741, -7.083506412}, {-7.708313742, -0.800321106},
            {-7.708313740, 5.482864201},  {-7.083506412, -7.708313738},
            {-7.083506414, -1.425128432}, {-7.083506413, 4.858056873},
            {-1.425128433, -7.083506412}, {-1.425128433, -0.800321105},
            {-1.425128434, 5.482864203},  {-0.800321106, -7.708313742},
            {-0.800321105, -1.425128433}, {-0.800321106, 4.858056874},
            {4.858056874, -7.083506412},  {4.858056874, -0.800321106},
            {4.858056873, 5.482864202},   {5.482864201, -7.708313740},
            {5.482864203, -1.425128434},  {5.482864202, 4.858056875}};
        shubert.expected_count = 18;
        reg.push_back(std::move(shubert));
    }

    reg.push_back({"Deb 1", "-(sin(5*pi*x1)^6 + sin(5*pi*x2)^6)/2", 2,
                   square(0.0, 1.0), -1.0, grid2({0.1, 0.3, 0.5, 0.7, 0.9}),
                   "", 25});

    {
        TestInstance vincent;
        vincent.name = "Vincent";
        vincent.formula = "-(sin(10*ln(x1)) + sin(10*ln(x2)))/2";
        vincent.dimension = 2;
        vincent.box = square(0.25, 10.0);
        vincent.known_min_value = -1.0;
        std::vector<double> axis;
        for (int k = -2; k <= 3; ++k)
            axis.push_back(std::exp(M_PI / 20.0 + k * M_PI / 5.0));
        vincent.known_minimizers = grid2(axis);
        vincent.expected_count = 36;
        reg.push_back(std::move(vincent));
    }

    reg.push_back({"Test01", "(x1^2/16 + x2^2/4 - 1)^2", 2, square(-5.0, 5.0),
                   0.0, {}, "ellipse x1^2/16 + x2^2/4 = 1", std::nullopt});
    reg.push_back({"Test02", "(x1*(1 - x2) + x2*(1 - x1))^2/10", 2,
                   square(-5.0, 5.0), 0.0, {},
                   "curve x2 = -x1/(1 - 2*x1)", std::nullopt});
    reg.push_back({"Test03", "sin(5*x1/4 + x2 - 3)^2", 2,
                   BoxRegion{{0.0, -2.0}, {4.0, 3.0}}, 0.0, {},
                   "lines 5*x1/4 + x2 = 3 + a, a in {0, +-pi}", std::nullopt});
    reg.push_back({"Test04", "(x1 + sin(x1)^2)*cos(x2)^2", 2,
                   BoxRegion{{0.0, -2.0}, {4.0, 3.0}}, 0.0, {},
                   "x1 = 0 or x2 = +-pi/2", std::nullopt});

    return reg;
}

TestInstance make_testdim(int d) {
    TestInstance inst;
    inst.name = "TestDim_" + std::to_string(d);
    std::ostringstream formula;
    for (int i = 1; i <= d; ++i) {
        if (i > 1) formula << " + ";
        formula << "cos(2*pi*x" << i << ")^2";
    }
    inst.formula = formula.str();
    inst.dimension = d;
    inst.box.lo.assign(static_cast<std::size_t>(d), -0.25);
    inst.box.hi.assign(static_cast<std::size_t>(d), 0.25);
    inst.known_min_value = 0.0;
    inst.known_minimizers = sign_patterns(0.25, d);
    inst.expected_count = 1 << d;
    return inst;
}

}  // namespace

const std::vector<TestInstance>& registry() {
    static const std::vector<TestInstance> reg = build_registry();
    return reg;
}

std::optional<TestInstance> find_instance(std::string_view name) {
    for (const TestInstance& inst : registry())
        if (inst.name == name) return inst;
    constexpr std::string_view prefix = "TestDim_";
    if (name.substr(0, prefix.size()) == prefix) {
        int d = 0;
        auto digits = name.substr(prefix.size());
        if (!digits.empty()) {
            for (char c : digits) {
                if (c < '0' || c > '9') return std::nullopt;
                d = d * 10 + (c - '0');
            }
            if (d >= 1 && d <= 16) return make_testdim(d);
        }
    }
    return std::nullopt;
}

std::vector<SuiteRow> run_suite(const std::vector<std::string>& names,
                                const SolverConfig& cfg) {
    std::vector<SuiteRow> rows;
    for (const std::string& name : names) {
        auto inst = find_instance(name);
        if (!inst) throw std::invalid_argument("unknown instance: " + name);
        Expression f = Expression::parse(inst->formula, inst->dimension);
        RunReport report = solve(f, inst->box, cfg);
        rows.push_back({inst->name, report.iterations, report.wall_ms,
                        static_cast<int>(report.clusters.size()),
                        report.flag_ter, report.f_min});
    }
    return rows;
}

std::string suite_csv(const std::vector<SuiteRow>& rows) {
    std::ostringstream out;
    out.precision(12);
    out << "name,iter,wall_ms,n_eps,flag_ter,f_min\n";
    for (const SuiteRow& r : rows)
        out << r.name << ',' << r.iter << ',' << r.wall_ms << ',' << r.n_eps
            << ',' << r.flag_ter << ',' << r.f_min << '\n';
    return out.str();
}

}  // namespace pcx
