#pragma once

#include <stdexcept>

#include "pcx/box.hpp"
#include "pcx/expression.hpp"

namespace pcx {

/// Closed real interval [lo, hi], lo <= hi, both finite. The enclosure
/// currency for Hessian-entry bounds. Containment, not tightness, is the
/// contract of compound evaluations; the elementary operations below are
/// tight.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double l, double h);
    static Interval point(double v) { return Interval(v, v); }

    double width() const { return hi - lo; }
    double mag() const;  // max |x| over the interval
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool subset_of(const Interval& other) const {
        return other.lo <= lo && hi <= other.hi;
    }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when 0 is in b.
Interval operator/(const Interval& a, const Interval& b);

Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval exp(const Interval& a);
/// Throws DomainError when a.lo <= 0.
Interval ln(const Interval& a);
Interval pow_int(const Interval& a, int exponent);

/// Natural interval extension of the expression over the box: the result
/// contains f(x) for every x in the box, and is inclusion-isotone.
Interval interval_evaluate(const Expression& expr, const BoxRegion& box);

}  // namespace pcx
