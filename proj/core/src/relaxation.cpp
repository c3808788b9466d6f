#include "pcx/relaxation.hpp"

#include <cmath>
#include <stdexcept>

namespace pcx {

namespace {
constexpr double kDegenerateWidth = 1e-14;
}

SymbolicDerivatives::SymbolicDerivatives(Expression f) : f_(std::move(f)) {
    const int n = f_.dimension();
    grad_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grad_.push_back(f_.derivative(i));
    hess_.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            hess_.push_back(grad_[static_cast<std::size_t>(i)].derivative(j));
    value_tape_ = Tape(std::span<const Expression>(&f_, 1));
    gradient_tape_ = Tape(grad_);
}

const Expression& SymbolicDerivatives::hessian(int i, int j) const {
    const int n = dimension();
    if (i > j) std::swap(i, j);
    // upper-triangle offset for row i: i*n - i(i-1)/2
    std::size_t idx = static_cast<std::size_t>(i * n - i * (i - 1) / 2 + (j - i));
    return hess_[idx];
}

std::vector<double> SymbolicDerivatives::gradient_at(
    std::span<const double> x) const {
    std::vector<double> g(grad_.size());
    std::vector<double> scratch;
    gradient_tape_.evaluate(x, g, scratch);
    return g;
}

std::vector<Interval> hessian_interval_bounds(const SymbolicDerivatives& d,
                                              const BoxRegion& box) {
    const int n = d.dimension();
    std::vector<Interval> bounds(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Interval b = interval_evaluate(d.hessian(i, j), box);
            bounds[static_cast<std::size_t>(i * n + j)] = b;
            bounds[static_cast<std::size_t>(j * n + i)] = b;
        }
    }
    return bounds;
}

double lambda_tilde(const std::vector<Interval>& bounds, int n) {
    double result = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            off += bounds[static_cast<std::size_t>(i * n + j)].mag();
        }
        result = std::min(result,
                          bounds[static_cast<std::size_t>(i * n + i)].lo - off);
    }
    return result;
}

AlphaCertificate compute_alpha(const std::vector<Interval>& bounds,
                               const BoxRegion& box) {
    const int n = box.dimension();
    if (bounds.size() != static_cast<std::size_t>(n * n))
        throw std::invalid_argument("hessian bounds dimension mismatch");

    AlphaCertificate cert;
    cert.hessian_bounds = bounds;
    cert.lambda_tilde = lambda_tilde(bounds, n);
    cert.alpha.assign(static_cast<std::size_t>(n), 0.0);
    if (cert.lambda_tilde >= 0.0) return cert;  // convex-box shortcut

    for (int i = 0; i < n; ++i) {
        double di = box.width(i);
        if (di <= kDegenerateWidth) continue;  // quadratic term vanishes
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double dj = box.width(j);
            if (dj <= kDegenerateWidth) continue;
            off += bounds[static_cast<std::size_t>(i * n + j)].mag() * (dj / di);
        }
        double v = -0.5 * (bounds[static_cast<std::size_t>(i * n + i)].lo - off);
        cert.alpha[static_cast<std::size_t>(i)] = std::max(0.0, v);
    }
    return cert;
}

double relaxed_value(const Expression& f, const BoxRegion& box,
                     std::span<const double> alpha, std::span<const double> x) {
    double v = f.evaluate(x);
    for (int i = 0; i < box.dimension(); ++i) {
        auto k = static_cast<std::size_t>(i);
        v += alpha[k] * (box.lo[k] - x[k]) * (box.hi[k] - x[k]);
    }
    return v;
}

std::vector<double> relaxed_gradient(const SymbolicDerivatives& d,
                                     const BoxRegion& box,
                                     std::span<const double> alpha,
                                     std::span<const double> x) {
    std::vector<double> g = d.gradient_at(x);
    for (int i = 0; i < box.dimension(); ++i) {
        auto k = static_cast<std::size_t>(i);
        g[k] += alpha[k] * (2.0 * x[k] - box.lo[k] - box.hi[k]);
    }
    return g;
}

double separation_distance(const BoxRegion& box,
                           std::span<const double> alpha) {
    return modified_width(box, alpha);
}

}  // namespace pcx
