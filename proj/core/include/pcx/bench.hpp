#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pcx/bnb.hpp"
#include "pcx/box.hpp"

namespace pcx {

/// One registered test problem. Minimizer coordinates are fixtures: taken
/// from the defining formulas where the optima are analytic, otherwise
/// computed once by a dense-grid + local-refinement oracle and frozen here.
struct TestInstance {
    std::string name;
    std::string formula;
    int dimension = 0;
    BoxRegion box;
    double known_min_value = 0.0;
    std::vector<std::vector<double>> known_minimizers;  // empty: infinite set
    std::string minimizer_set_note;  // analytic descriptor for infinite sets
    std::optional<int> expected_count;
};

/// The fixed instance list (finite-optima set, infinite-solution set). The
/// dimension-parameterized family is reachable through find_instance.
const std::vector<TestInstance>& registry();

/// Looks up by name; synthesizes "TestDim_<d>" on demand. Null if unknown.
std::optional<TestInstance> find_instance(std::string_view name);

struct SuiteRow {
    std::string name;
    long iter = 0;
    double wall_ms = 0.0;
    int n_eps = 0;
    int flag_ter = 0;
    double f_min = 0.0;
};

/// Runs each named instance through the solver and collects summary rows.
/// Throws std::invalid_argument on an unknown name.
std::vector<SuiteRow> run_suite(const std::vector<std::string>& names,
                                const SolverConfig& cfg);

/// CSV with header: name,iter,wall_ms,n_eps,flag_ter,f_min
std::string suite_csv(const std::vector<SuiteRow>& rows);

/// Subdivision plot: one rectangle per box (stroke color by list), star
/// markers at cluster representatives. 2-D reports only; the report must
/// carry box lists.
void emit_subdivision_svg(const RunReport& report, const BoxRegion& domain,
                          std::ostream& out);

}  // namespace pcx
