#include "nodallab/svg.hpp"

#include <cmath>
#include <cstdio>

namespace nodallab {

namespace {

void svg_open(std::ostream& os, double view) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.3f %.3f %.3f %.3f\">\n",
                  -view, -view, 2 * view, 2 * view);
    os << buf;
}

void line(std::ostream& os, double x1, double y1, double x2, double y2, const char* color) {
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.5f\" y1=\"%.5f\" x2=\"%.5f\" y2=\"%.5f\" stroke=\"%s\" "
                  "stroke-width=\"0.006\"/>\n",
                  x1, y1, x2, y2, color);
    os << buf;
}

void dot(std::ostream& os, double x, double y, double r, const char* fill, const char* stroke) {
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.5f\" cy=\"%.5f\" r=\"%.4f\" fill=\"%s\" stroke=\"%s\" "
                  "stroke-width=\"0.006\"/>\n",
                  x, y, r, fill, stroke);
    os << buf;
}

} // namespace

void write_chord_diagram_svg(std::ostream& os, const ChordDiagram& d) {
    svg_open(os, 1.15);
    os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
          "stroke-width=\"0.01\"/>\n";

    // Family A: chords <p, a> = x with a = (1, 0); vertical lines x = const.
    for (double h : d.chords_a) {
        const double half = std::sqrt(std::max(0.0, 1.0 - h * h));
        line(os, h, -half, h, half, "#1f77b4");
    }
    // Family B: chords perpendicular to b = (cos psi, sin psi).
    const double c = std::cos(d.axis_angle), s = std::sin(d.axis_angle);
    for (double h : d.chords_b) {
        const double half = std::sqrt(std::max(0.0, 1.0 - h * h));
        const double px = h * c, py = h * s;     // foot of the chord
        const double tx = -s, ty = c;            // chord direction
        line(os, px - half * tx, py - half * ty, px + half * tx, py + half * ty, "#d62728");
    }
    // Crossings.
    for (double xa : d.chords_a) {
        for (double xb : d.chords_b) {
            if (std::abs(s) < 1e-14) continue;
            const double py = (xb - c * xa) / s;
            const double r2 = xa * xa + py * py;
            const double margin = 1.0 - r2;
            if (std::abs(margin) < kTangencyTol)
                dot(os, xa, py, 0.025, "none", "black");
            else if (margin > 0.0)
                dot(os, xa, py, 0.018, "black", "none");
        }
    }
    os << "</svg>\n";
}

void write_contours_svg(std::ostream& os, const std::vector<SphereContour>& contours,
                        const std::vector<CommonZero>& zeros) {
    // Stereographic projection from the north pole; points near it run far out, so
    // clip the viewport instead of the data.
    const auto project = [](const SpherePoint& p) {
        const double d = std::max(1e-6, 1.0 - p.z());
        return std::pair<double, double>{p.x() / d, p.y() / d};
    };
    svg_open(os, 4.0);
    os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" "
          "stroke-width=\"0.01\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};
    for (std::size_t k = 0; k < contours.size(); ++k) {
        const auto& pts = contours[k].vertices();
        os << "<polygon fill=\"none\" stroke=\"" << colors[k % 6]
           << "\" stroke-width=\"0.012\" points=\"";
        char buf[64];
        for (const auto& p : pts) {
            const auto [x, y] = project(p);
            std::snprintf(buf, sizeof buf, "%.5f,%.5f ", x, y);
            os << buf;
        }
        os << "\"/>\n";
    }
    for (const auto& z : zeros) {
        const auto [x, y] = project(z.point);
        dot(os, x, y, 0.05, "black", "none");
    }
    os << "</svg>\n";
}

} // namespace nodallab
