#pragma once

#include <string>
#include <vector>

#include "pcx/box.hpp"
#include "pcx/expression.hpp"
#include "pcx/solver.hpp"

namespace pcx {

/// One worklist entry: a sub-box with its relaxation minimizer, relaxation
/// minimum, convexification alpha, and eigenvalue lower bound.
struct NodeRecord {
    BoxRegion box;
    std::vector<double> candidate;
    double relaxed_min = 0.0;
    std::vector<double> alpha;
    double lambda_tilde = 0.0;
    double width_metric = 0.0;  // modified_width(box, alpha), cached
};

struct SolutionPoint {
    std::vector<double> x;
    double f = 0.0;
};

struct RunReport {
    std::vector<SolutionPoint> solutions;  // filtered candidate pool
    std::vector<SolutionPoint> clusters;   // one representative per cluster
    double f_min = 0.0;
    long iterations = 0;
    int flag_ter = 0;  // 1: active list exhausted; 0: max modified width <= eps
    double wall_ms = 0.0;
    std::size_t boxes_active = 0;
    std::size_t boxes_convex = 0;
    std::size_t boxes_discarded = 0;
    // Full node lists, kept when requested (needed for subdivision plots).
    bool has_boxes = false;
    std::vector<NodeRecord> list_active;
    std::vector<NodeRecord> list_convex;
    std::vector<NodeRecord> list_discarded;
};

/// Piecewise-convexification branch and bound over the box. Bisects the
/// active box of maximum modified width, convexifies both children, solves
/// the convex relaxations, discards sub-boxes whose relaxation minimum
/// exceeds the best known objective value, and collects the surviving
/// candidates whose objective value ties the best one found.
RunReport solve(const Expression& f, const BoxRegion& x0,
                const SolverConfig& cfg, bool keep_boxes = false);

/// Index of the earliest-inserted record attaining the maximum cached
/// modified width. Throws on an empty list.
std::size_t select_node(const std::vector<NodeRecord>& active);

/// Moves every record with relaxed_min > v_glob (strict, no margin) from the
/// active list to the discard list, preserving order. Returns the move count.
std::size_t discard_sweep(std::vector<NodeRecord>& active,
                          std::vector<NodeRecord>& discarded, double v_glob);

/// Keeps pool points whose objective value is within filter_tol of the pool
/// minimum.
std::vector<SolutionPoint> assemble_solution_set(
    const std::vector<SolutionPoint>& pool, double filter_tol);

/// Greedy clustering by Euclidean distance; points are visited in ascending
/// objective order, so each representative is the lowest-value point of its
/// cluster.
std::vector<SolutionPoint> cluster_solutions(std::vector<SolutionPoint> points,
                                             double delta);

// Structured-text (JSON) report serialization. The domain box and function
// text ride along so a report is self-contained for plotting.
std::string report_to_json(const RunReport& report, const BoxRegion& domain,
                           const std::string& function_text);
struct ParsedReport {
    RunReport report;
    BoxRegion domain;
    std::string function_text;
};
ParsedReport report_from_json(const std::string& text);

}  // namespace pcx
