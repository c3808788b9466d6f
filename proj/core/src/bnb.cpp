#include "pcx/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pcx/relaxation.hpp"

namespace pcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NodeRecord make_record(BoxRegion box, std::vector<double> candidate, double mu,
                       const AlphaCertificate& cert) {
    NodeRecord rec;
    rec.width_metric = modified_width(box, cert.alpha);
    rec.box = std::move(box);
    rec.candidate = std::move(candidate);
    rec.relaxed_min = mu;
    rec.alpha = cert.alpha;
    rec.lambda_tilde = cert.lambda_tilde;
    return rec;
}

double max_width_metric(const std::vector<NodeRecord>& active) {
    double w = 0.0;
    for (const NodeRecord& r : active) w = std::max(w, r.width_metric);
    return w;
}

}  // namespace

std::size_t select_node(const std::vector<NodeRecord>& active) {
    if (active.empty()) throw std::logic_error("select_node on empty list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < active.size(); ++i)
        if (active[i].width_metric > active[best].width_metric) best = i;
    return best;
}

std::size_t discard_sweep(std::vector<NodeRecord>& active,
                          std::vector<NodeRecord>& discarded, double v_glob) {
    std::size_t moved = 0;
    std::vector<NodeRecord> kept;
    kept.reserve(active.size());
    for (NodeRecord& r : active) {
        if (r.relaxed_min > v_glob) {
            discarded.push_back(std::move(r));
            ++moved;
        } else {
            kept.push_back(std::move(r));
        }
    }
    active = std::move(kept);
    return moved;
}

std::vector<SolutionPoint> assemble_solution_set(
    const std::vector<SolutionPoint>& pool, double filter_tol) {
    std::vector<SolutionPoint> out;
    if (pool.empty()) return out;
    double best = kInf;
    for (const SolutionPoint& p : pool) best = std::min(best, p.f);
    for (const SolutionPoint& p : pool)
        if (p.f <= best + filter_tol) out.push_back(p);
    return out;
}

std::vector<SolutionPoint> cluster_solutions(std::vector<SolutionPoint> points,
                                             double delta) {
    std::stable_sort(points.begin(), points.end(),
                     [](const SolutionPoint& a, const SolutionPoint& b) {
                         return a.f < b.f;
                     });
    std::vector<SolutionPoint> reps;
    for (SolutionPoint& p : points) {
        bool merged = false;
        for (const SolutionPoint& r : reps) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < p.x.size(); ++i) {
                double d = p.x[i] - r.x[i];
                d2 += d * d;
            }
            if (d2 <= delta * delta) {
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(std::move(p));
    }
    return reps;
}

RunReport solve(const Expression& f, const BoxRegion& x0,
                const SolverConfig& cfg, bool keep_boxes) {
    if (!x0.valid()) throw std::invalid_argument("invalid initial box");
    if (x0.dimension() != f.dimension())
        throw std::invalid_argument("box/function dimension mismatch");
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

    const auto t0 = std::chrono::steady_clock::now();
    SymbolicDerivatives derivs(f);

    std::vector<NodeRecord> active;     // non-convex worklist
    std::vector<NodeRecord> convex;     // certified convex, frozen
    std::vector<NodeRecord> discarded;

    double v_glob = kInf;
    double v_act = kInf;
    std::vector<double> x_act = x0.midpoint();

    AlphaCertificate root_cert =
        compute_alpha(hessian_interval_bounds(derivs, x0), x0);
    if (root_cert.lambda_tilde >= 0.0) {
        // Convex on the whole domain: a single convex solve settles it.
        SolveResult r = minimize_on_box(derivs, x0, root_cert.alpha, cfg);
        convex.push_back(make_record(x0, r.minimizer, r.value, root_cert));
        v_act = v_glob = f.evaluate(convex.back().candidate);
        x_act = convex.back().candidate;
    } else {
        active.push_back(make_record(x0, x0.midpoint(), -kInf, root_cert));
    }

    long iter = 0;
    while (!active.empty() && max_width_metric(active) > cfg.epsilon &&
           iter < cfg.max_outer_iters) {
        ++iter;
        std::size_t sel = select_node(active);
        NodeRecord parent = std::move(active[sel]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(sel));

        auto [left, right] = split(parent.box);
        for (BoxRegion* child_ptr : {&left, &right}) {
            BoxRegion& child = *child_ptr;
            AlphaCertificate cert =
                compute_alpha(hessian_interval_bounds(derivs, child), child);
            SolveResult r = minimize_on_box(derivs, child, cert.alpha, cfg);
            NodeRecord rec =
                make_record(std::move(child), std::move(r.minimizer), r.value, cert);

            if (rec.relaxed_min <= v_glob + cfg.discard_margin) {
                double fx = f.evaluate(rec.candidate);
                std::vector<double> cand = rec.candidate;
                if (rec.lambda_tilde >= 0.0)
                    convex.push_back(std::move(rec));
                else
                    active.push_back(std::move(rec));
                if (fx <= v_act) {
                    x_act = std::move(cand);
                    v_act = fx;
                    v_glob = std::min(v_act, v_glob);
                    discard_sweep(active, discarded, v_glob);
                }
            } else {
                discarded.push_back(std::move(rec));
            }
        }
    }

    RunReport report;
    report.iterations = iter;
    report.flag_ter = active.empty() ? 1 : 0;
    report.boxes_active = active.size();
    report.boxes_convex = convex.size();
    report.boxes_discarded = discarded.size();

    // Candidate pool over the retained boxes.
    std::vector<SolutionPoint> pool;
    pool.reserve(active.size() + convex.size());
    for (const std::vector<NodeRecord>* list : {&active, &convex})
        for (const NodeRecord& rec : *list)
            pool.push_back({rec.candidate, f.evaluate(rec.candidate)});

    report.f_min = kInf;
    for (const SolutionPoint& p : pool) report.f_min = std::min(report.f_min, p.f);
    report.solutions = assemble_solution_set(pool, cfg.filter_tol);
    report.clusters = cluster_solutions(report.solutions, cfg.cluster_delta);

    if (keep_boxes) {
        report.has_boxes = true;
        report.list_active = std::move(active);
        report.list_convex = std::move(convex);
        report.list_discarded = std::move(discarded);
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

}  // namespace pcx
