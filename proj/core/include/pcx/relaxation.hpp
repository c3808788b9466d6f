#pragma once

#include <span>
#include <vector>

#include "pcx/box.hpp"
#include "pcx/expression.hpp"
#include "pcx/interval.hpp"
#include "pcx/tape.hpp"

namespace pcx {

/// Symbolic gradient and Hessian of a function, built once and reused across
/// boxes. Hessian entries are expressions so they can be interval-evaluated.
class SymbolicDerivatives {
public:
    explicit SymbolicDerivatives(Expression f);

    const Expression& function() const { return f_; }
    int dimension() const { return f_.dimension(); }
    const Expression& gradient(int i) const {
        return grad_[static_cast<std::size_t>(i)];
    }
    // Symmetric; stored as the upper triangle.
    const Expression& hessian(int i, int j) const;

    double evaluate(std::span<const double> x) const { return f_.evaluate(x); }
    std::vector<double> gradient_at(std::span<const double> x) const;

    // Compiled forms for hot-loop evaluation.
    const Tape& value_tape() const { return value_tape_; }
    const Tape& gradient_tape() const { return gradient_tape_; }

private:
    Expression f_;
    std::vector<Expression> grad_;
    std::vector<Expression> hess_;  // upper triangle, row-major
    Tape value_tape_;
    Tape gradient_tape_;
};

/// Per-box convexification certificate: alpha_i >= 0 per dimension, the
/// eigenvalue lower bound computed with unit weights, and the Hessian-entry
/// enclosures both were derived from.
struct AlphaCertificate {
    std::vector<double> alpha;
    double lambda_tilde = 0.0;
    std::vector<Interval> hessian_bounds;  // n*n row-major, symmetric
};

/// Entry (i,j) contains the Hessian entry over the box (natural interval
/// extension of the symbolic second derivative).
std::vector<Interval> hessian_interval_bounds(const SymbolicDerivatives& d,
                                              const BoxRegion& box);

/// min_i (lo of (i,i) - sum_{j != i} max(|lo|,|hi|) of (i,j)), unit weights.
/// Non-negative values certify convexity on the box.
double lambda_tilde(const std::vector<Interval>& bounds, int n);

/// Per-dimension alpha with width-ratio weights; zero when lambda_tilde >= 0.
/// Degenerate dimensions (width <= 1e-14) get alpha 0 and are excluded from
/// the ratio sums.
AlphaCertificate compute_alpha(const std::vector<Interval>& bounds,
                               const BoxRegion& box);

/// F(x) = f(x) + sum_i alpha_i (lo_i - x_i)(hi_i - x_i); underestimates f on
/// the box and coincides with it at every corner.
double relaxed_value(const Expression& f, const BoxRegion& box,
                     std::span<const double> alpha, std::span<const double> x);

/// grad F(x)_i = grad f(x)_i + alpha_i (2 x_i - lo_i - hi_i).
std::vector<double> relaxed_gradient(const SymbolicDerivatives& d,
                                     const BoxRegion& box,
                                     std::span<const double> alpha,
                                     std::span<const double> x);

/// Maximum f - F gap over the box; equals modified_width(box, alpha) and is
/// attained at the midpoint.
double separation_distance(const BoxRegion& box, std::span<const double> alpha);

}  // namespace pcx
