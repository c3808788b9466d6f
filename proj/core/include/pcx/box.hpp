#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcx {

/// Axis-aligned box [lo, hi] in R^n. Degenerate dimensions (zero width) are
/// legal everywhere except branching_index/split.
struct BoxRegion {
    std::vector<double> lo;
    std::vector<double> hi;

    int dimension() const { return static_cast<int>(lo.size()); }
    double width(int i) const { return hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]; }
    double max_width() const;
    std::vector<double> midpoint() const;
    double measure() const;
    bool contains(std::span<const double> x, double slack = 0.0) const;
    bool valid() const;
};

/// Smallest index attaining the maximum width. Throws std::invalid_argument
/// on a fully degenerate box.
int branching_index(const BoxRegion& box);

/// Bisect at the midpoint along the branching index. The children share the
/// splitting facet and partition the parent.
std::pair<BoxRegion, BoxRegion> split(const BoxRegion& box);

/// w(X, alpha) = sum_i alpha_i ((hi_i - lo_i)/2)^2; also the maximum gap
/// between a function and its relaxation on the box.
double modified_width(const BoxRegion& box, std::span<const double> alpha);

/// Parses "[-5.12,5.12]x[-5.12,5.12]".
BoxRegion parse_box(std::string_view text);

std::string to_string(const BoxRegion& box);

}  // namespace pcx
