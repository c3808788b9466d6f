#include "pcx/interval.hpp"

#include <algorithm>
#include <cmath>

namespace pcx {

namespace {

// Does [a, b] contain a point of the form offset + k*period for integer k?
bool contains_grid_point(double a, double b, double offset, double period) {
    double k = std::ceil((a - offset) / period);
    return offset + k * period <= b;
}

Interval eval_node(const ExprNode& n, const BoxRegion& box) {
    switch (n.kind) {
        case NodeKind::Constant: return Interval::point(n.value);
        case NodeKind::Pi: return Interval::point(M_PI);
        case NodeKind::Variable: {
            auto i = static_cast<std::size_t>(n.index);
            return Interval(box.lo[i], box.hi[i]);
        }
        case NodeKind::Negate: return -eval_node(*n.lhs, box);
        case NodeKind::Sin: return sin(eval_node(*n.lhs, box));
        case NodeKind::Cos: return cos(eval_node(*n.lhs, box));
        case NodeKind::Exp: return exp(eval_node(*n.lhs, box));
        case NodeKind::Ln: return ln(eval_node(*n.lhs, box));
        case NodeKind::Add: return eval_node(*n.lhs, box) + eval_node(*n.rhs, box);
        case NodeKind::Sub: return eval_node(*n.lhs, box) - eval_node(*n.rhs, box);
        case NodeKind::Mul: return eval_node(*n.lhs, box) * eval_node(*n.rhs, box);
        case NodeKind::Div: return eval_node(*n.lhs, box) / eval_node(*n.rhs, box);
        case NodeKind::Pow: return pow_int(eval_node(*n.lhs, box), n.exponent);
    }
    throw std::logic_error("unreachable node kind");
}

}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("invalid interval bounds");
}

double Interval::mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0.0)) throw DomainError("interval division by zero");
    return a * Interval(1.0 / b.hi, 1.0 / b.lo);
}

Interval cos(const Interval& a) {
    constexpr double two_pi = 2.0 * M_PI;
    double hi = contains_grid_point(a.lo, a.hi, 0.0, two_pi)
                    ? 1.0
                    : std::max(std::cos(a.lo), std::cos(a.hi));
    double lo = contains_grid_point(a.lo, a.hi, M_PI, two_pi)
                    ? -1.0
                    : std::min(std::cos(a.lo), std::cos(a.hi));
    return Interval(lo, hi);
}

Interval sin(const Interval& a) {
    constexpr double two_pi = 2.0 * M_PI;
    double hi = contains_grid_point(a.lo, a.hi, 0.5 * M_PI, two_pi)
                    ? 1.0
                    : std::max(std::sin(a.lo), std::sin(a.hi));
    double lo = contains_grid_point(a.lo, a.hi, -0.5 * M_PI, two_pi)
                    ? -1.0
                    : std::min(std::sin(a.lo), std::sin(a.hi));
    return Interval(lo, hi);
}

Interval exp(const Interval& a) {
    return Interval(std::exp(a.lo), std::exp(a.hi));
}

Interval ln(const Interval& a) {
    if (!(a.lo > 0.0)) throw DomainError("interval ln of non-positive argument");
    return Interval(std::log(a.lo), std::log(a.hi));
}

Interval pow_int(const Interval& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative integer exponent");
    if (exponent == 0) return Interval::point(1.0);
    auto ipow = [](double v, int k) {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= v;
        return r;
    };
    double pl = ipow(a.lo, exponent), ph = ipow(a.hi, exponent);
    if (exponent % 2 == 1) return Interval(pl, ph);
    // even power: sign straddle maps to [0, max]
    if (a.lo <= 0.0 && 0.0 <= a.hi) return Interval(0.0, std::max(pl, ph));
    return Interval(std::min(pl, ph), std::max(pl, ph));
}

Interval interval_evaluate(const Expression& expr, const BoxRegion& box) {
    if (box.dimension() != expr.dimension())
        throw std::invalid_argument("box dimension mismatch");
    return eval_node(*expr.root(), box);
}

}  // namespace pcx
