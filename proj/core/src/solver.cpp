#include "pcx/solver.hpp"

#include <algorithm>
#include <cmath>

namespace pcx {

namespace {

double quad_term(const BoxRegion& box, std::span<const double> alpha,
                 std::span<const double> x) {
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        q += alpha[i] * (box.lo[i] - x[i]) * (box.hi[i] - x[i]);
    return q;
}

}  // namespace

SolveResult minimize_on_box(const SymbolicDerivatives& d, const BoxRegion& box,
                            std::span<const double> alpha,
                            const SolverConfig& cfg) {
    constexpr double kArmijo = 1e-4;
    constexpr double kShrink = 0.5;
    constexpr double kMinStep = 1e-18;

    const Tape& ftape = d.value_tape();
    const Tape& gtape = d.gradient_tape();
    std::vector<double> scratch;

    auto F = [&](std::span<const double> x) {
        return ftape.evaluate_single(x, scratch) + quad_term(box, alpha, x);
    };

    SolveResult res;
    std::vector<double> x = box.midpoint();
    const std::size_t n = x.size();
    double fx = F(x);

    std::vector<double> g(n), trial(n);
    double step = 1.0;  // warm-started across iterations, capped at 1.0
    for (int it = 0; it < cfg.inner_max_iters; ++it) {
        gtape.evaluate(x, g, scratch);
        for (std::size_t i = 0; i < n; ++i)
            g[i] += alpha[i] * (2.0 * x[i] - box.lo[i] - box.hi[i]);

        double stat = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double p = std::clamp(x[i] - g[i], box.lo[i], box.hi[i]);
            stat = std::max(stat, std::fabs(x[i] - p));
        }
        if (stat <= cfg.inner_tol) {
            res.converged = true;
            res.iterations = it;
            break;
        }

        double t = std::min(1.0, 2.0 * step);
        bool accepted = false;
        while (t >= kMinStep) {
            for (std::size_t i = 0; i < n; ++i)
                trial[i] = std::clamp(x[i] - t * g[i], box.lo[i], box.hi[i]);
            double ft = F(trial);
            double decrease = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                decrease += g[i] * (trial[i] - x[i]);
            if (ft <= fx + kArmijo * decrease) {
                x.swap(trial);
                fx = ft;
                step = t;
                accepted = true;
                break;
            }
            t *= kShrink;
        }
        res.iterations = it + 1;
        if (!accepted) {
            // step collapsed below resolution; treat as stationary
            res.converged = true;
            break;
        }
    }

    res.minimizer = std::move(x);
    res.value = fx;
    return res;
}

}  // namespace pcx
