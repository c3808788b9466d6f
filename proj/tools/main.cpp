// Command-line front end: solve a single problem, run the benchmark suite,
// or render a subdivision plot from a saved report.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcx/bench.hpp"
#include "pcx/bnb.hpp"
#include "pcx/box.hpp"
#include "pcx/expression.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUserError = 2;

void add_config_flags(CLI::App* cmd, pcx::SolverConfig& cfg) {
    cmd->add_option("--eps", cfg.epsilon, "Outer termination tolerance");
    cmd->add_option("--discard-margin", cfg.discard_margin,
                    "Margin on the child acceptance test");
    cmd->add_option("--inner-tol", cfg.inner_tol,
                    "Inner solver stationarity tolerance");
    cmd->add_option("--inner-max-iters", cfg.inner_max_iters,
                    "Inner solver iteration cap");
    cmd->add_option("--filter-tol", cfg.filter_tol,
                    "Solution-set objective-value filter");
    cmd->add_option("--cluster-delta", cfg.cluster_delta,
                    "Cluster merge radius");
    cmd->add_option("--max-outer-iters", cfg.max_outer_iters,
                    "Outer iteration safety cap");
}

int run_solve(const std::string& function_text, const std::string& box_text,
              const pcx::SolverConfig& cfg, const std::string& out_path) {
    pcx::BoxRegion box = pcx::parse_box(box_text);
    pcx::Expression f = pcx::Expression::parse(function_text, box.dimension());
    pcx::RunReport report = pcx::solve(f, box, cfg, box.dimension() == 2);

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUserError;
    }
    out << pcx::report_to_json(report, box, function_text);

    std::cout << "iter=" << report.iterations
              << " n_eps=" << report.clusters.size() << " f_min=" << report.f_min
              << " flag_ter=" << report.flag_ter << "\n";
    return kExitOk;
}

int run_bench(const std::string& instance, const pcx::SolverConfig& cfg,
              const std::string& out_path) {
    std::vector<std::string> names;
    if (instance == "all") {
        for (const pcx::TestInstance& inst : pcx::registry())
            names.push_back(inst.name);
    } else {
        names.push_back(instance);
    }
    std::vector<pcx::SuiteRow> rows = pcx::run_suite(names, cfg);
    std::string csv = pcx::suite_csv(rows);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUserError;
        }
        out << csv;
    }
    return kExitOk;
}

int run_plot(const std::string& report_path, const std::string& out_path) {
    std::ifstream in(report_path);
    if (!in) {
        std::cerr << "error: cannot read " << report_path << "\n";
        return kExitUserError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    pcx::ParsedReport parsed = pcx::report_from_json(buf.str());
    if (parsed.domain.dimension() != 2 || !parsed.report.has_boxes) {
        std::cerr << "error: report is not a plottable 2-D run\n";
        return kExitUserError;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUserError;
    }
    pcx::emit_subdivision_svg(parsed.report, parsed.domain, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise convexification global optimizer"};
    app.require_subcommand(1);

    pcx::SolverConfig cfg;

    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem");
    std::string function_text, box_text, solve_out = "report.json";
    solve_cmd->add_option("--function", function_text, "Objective formula")
        ->required();
    solve_cmd->add_option("--box", box_text, "Domain, e.g. [-1,1]x[-1,1]")
        ->required();
    solve_cmd->add_option("--out", solve_out, "Report output path");
    add_config_flags(solve_cmd, cfg);

    auto* bench_cmd = app.add_subcommand("bench", "Run benchmark instances");
    std::string instance, bench_out;
    bench_cmd->add_option("--instance", instance, "Instance name or 'all'")
        ->required();
    bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");
    add_config_flags(bench_cmd, cfg);

    auto* plot_cmd = app.add_subcommand("plot", "Render a subdivision SVG");
    std::string report_path, plot_out;
    plot_cmd->add_option("--report", report_path, "Report JSON file")->required();
    plot_cmd->add_option("--out", plot_out, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUserError;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(function_text, box_text, cfg, solve_out);
        if (bench_cmd->parsed()) return run_bench(instance, cfg, bench_out);
        if (plot_cmd->parsed()) return run_plot(report_path, plot_out);
        return kExitUserError;
    } catch (const pcx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const pcx::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
