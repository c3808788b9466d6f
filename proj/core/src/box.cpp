#include "pcx/box.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pcx/expression.hpp"  // ParseError

namespace pcx {

double BoxRegion::max_width() const {
    double w = 0.0;
    for (int i = 0; i < dimension(); ++i) w = std::max(w, width(i));
    return w;
}

std::vector<double> BoxRegion::midpoint() const {
    std::vector<double> m(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) m[i] = 0.5 * (lo[i] + hi[i]);
    return m;
}

double BoxRegion::measure() const {
    double v = 1.0;
    for (int i = 0; i < dimension(); ++i) v *= width(i);
    return v;
}

bool BoxRegion::contains(std::span<const double> x, double slack) const {
    if (x.size() != lo.size()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] - slack || x[i] > hi[i] + slack) return false;
    return true;
}

bool BoxRegion::valid() const {
    if (lo.size() != hi.size() || lo.empty()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] <= hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i]))
            return false;
    return true;
}

int branching_index(const BoxRegion& box) {
    if (!box.valid()) throw std::invalid_argument("invalid box");
    int best = -1;
    double best_w = 0.0;
    for (int i = 0; i < box.dimension(); ++i) {
        double w = box.width(i);
        if (w > best_w) {
            best_w = w;
            best = i;
        }
    }
    if (best < 0) throw std::invalid_argument("degenerate box: all widths zero");
    return best;
}

std::pair<BoxRegion, BoxRegion> split(const BoxRegion& box) {
    int l = branching_index(box);
    double mid = 0.5 * (box.lo[static_cast<std::size_t>(l)] +
                        box.hi[static_cast<std::size_t>(l)]);
    BoxRegion left = box;
    BoxRegion right = box;
    left.hi[static_cast<std::size_t>(l)] = mid;
    right.lo[static_cast<std::size_t>(l)] = mid;
    return {std::move(left), std::move(right)};
}

double modified_width(const BoxRegion& box, std::span<const double> alpha) {
    if (static_cast<int>(alpha.size()) != box.dimension())
        throw std::invalid_argument("alpha dimension mismatch");
    double w = 0.0;
    for (int i = 0; i < box.dimension(); ++i) {
        double h = 0.5 * box.width(i);
        w += alpha[static_cast<std::size_t>(i)] * h * h;
    }
    return w;
}

BoxRegion parse_box(std::string_view text) {
    BoxRegion box;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' in box literal", pos);
        ++pos;
    };
    auto number = [&]() -> double {
        skip_ws();
        const char* begin = text.data() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number in box literal", pos);
        pos += static_cast<std::size_t>(end - begin);
        return v;
    };
    for (;;) {
        expect('[');
        double a = number();
        expect(',');
        double b = number();
        expect(']');
        if (!(a <= b)) throw ParseError("box interval with lo > hi", pos);
        box.lo.push_back(a);
        box.hi.push_back(b);
        skip_ws();
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input in box literal", pos);
    return box;
}

std::string to_string(const BoxRegion& box) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < box.dimension(); ++i) {
        if (i) out << 'x';
        out << '[' << box.lo[static_cast<std::size_t>(i)] << ','
            << box.hi[static_cast<std::size_t>(i)] << ']';
    }
    return out.str();
}

}  // namespace pcx
