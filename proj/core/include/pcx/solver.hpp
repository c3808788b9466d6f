#pragma once

#include <span>
#include <vector>

#include "pcx/box.hpp"
#include "pcx/relaxation.hpp"

namespace pcx {

struct SolverConfig {
    double epsilon = 1e-3;        // outer termination: max modified width
    double discard_margin = 1e-6; // child acceptance test mu <= v_glob + margin
    double inner_tol = 1e-8;      // projected-gradient stationarity
    int inner_max_iters = 5000;
    double filter_tol = 1e-6;     // solution-set f-value filter
    double cluster_delta = 1e-2;  // representative clustering radius
    long max_outer_iters = 1'000'000;  // safety only
};

struct SolveResult {
    std::vector<double> minimizer;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Minimizes the relaxed function F over the box with projected gradient
/// descent and Armijo backtracking, starting at the box midpoint. The caller
/// supplies an alpha that certifies convexity of F; on max-iteration overrun
/// the best iterate is returned with converged = false.
SolveResult minimize_on_box(const SymbolicDerivatives& d, const BoxRegion& box,
                            std::span<const double> alpha,
                            const SolverConfig& cfg);

}  // namespace pcx
