#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "pcx/bench.hpp"

namespace pcx {

namespace {

// y is flipped so the plot reads with the axis pointing up.
void emit_rect(std::ostream& out, const BoxRegion& box, const char* stroke,
               double stroke_width) {
    out << "  <rect x=\"" << box.lo[0] << "\" y=\"" << -box.hi[1]
        << "\" width=\"" << box.width(0) << "\" height=\"" << box.width(1)
        << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << stroke_width << "\"/>\n";
}

void emit_star(std::ostream& out, double cx, double cy, double r,
               const char* fill) {
    out << "  <polygon fill=\"" << fill << "\" points=\"";
    for (int k = 0; k < 10; ++k) {
        double rad = (k % 2 == 0) ? r : 0.4 * r;
        double ang = -M_PI / 2.0 + k * M_PI / 5.0;
        if (k) out << ' ';
        out << cx + rad * std::cos(ang) << ',' << -cy + rad * std::sin(ang);
    }
    out << "\"/>\n";
}

}  // namespace

void emit_subdivision_svg(const RunReport& report, const BoxRegion& domain,
                          std::ostream& out) {
    if (domain.dimension() != 2)
        throw std::invalid_argument("subdivision plot requires dimension 2");
    if (!report.has_boxes)
        throw std::invalid_argument("report carries no box lists");

    const double margin = 1.0;
    const double vx = domain.lo[0] - margin;
    const double vy = -domain.hi[1] - margin;
    const double vw = domain.width(0) + 2.0 * margin;
    const double vh = domain.width(1) + 2.0 * margin;
    const double stroke_width = std::max(vw, vh) / 800.0;
    const double star_r = std::max(vw, vh) / 120.0;

    out << std::setprecision(12);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vx << ' '
        << vy << ' ' << vw << ' ' << vh << "\" width=\"800\" height=\""
        << 800.0 * vh / vw << "\">\n";
    out << "  <rect x=\"" << vx << "\" y=\"" << vy << "\" width=\"" << vw
        << "\" height=\"" << vh << "\" fill=\"white\"/>\n";

    for (const NodeRecord& rec : report.list_discarded)
        emit_rect(out, rec.box, "#c8c8c8", stroke_width);
    for (const NodeRecord& rec : report.list_convex)
        emit_rect(out, rec.box, "#2ca02c", stroke_width);
    for (const NodeRecord& rec : report.list_active)
        emit_rect(out, rec.box, "#1f77b4", stroke_width);

    for (const SolutionPoint& p : report.clusters)
        emit_star(out, p.x[0], p.x[1], star_r, "#d62728");

    out << "</svg>\n";
}

}  // namespace pcx
