#include "nodallab/circles.hpp"

#include <cmath>

namespace nodallab {

std::vector<NodalCircle> nodal_circles(const SpherePoint& axis, int degree) {
    const auto z = legendre_zeros(degree);
    std::vector<NodalCircle> out;
    out.reserve(degree);
    for (double h : z.zeros) out.emplace_back(axis, h);
    return out;
}

CirclePairIntersection circle_pair_intersections(const NodalCircle& c1, const NodalCircle& c2) {
    const Vec3 a = c1.axis.vec(), b = c2.axis.vec();
    const double c = dot(a, b);
    if (std::abs(c) > 1.0 - kParallelTol)
        throw ParallelAxesError("circle_pair_intersections: axes too close to parallel");

    const double s = c1.height, t = c2.height;
    const double d = 1.0 - c * c;
    const double alpha = (s - c * t) / d;
    const double beta = (t - c * s) / d;
    const double gamma2 = 1.0 - (alpha * alpha + beta * beta + 2.0 * alpha * beta * c);

    CirclePairIntersection out;
    const Vec3 base = a * alpha + b * beta;
    if (std::abs(gamma2) < kTangencyTol) {
        out.tangent = true;
        out.points.push_back(SpherePoint::normalized(base));
    } else if (gamma2 > 0.0) {
        const Vec3 w = normalized(cross(a, b));
        const double gamma = std::sqrt(gamma2);
        out.points.push_back(SpherePoint::normalized(base + w * gamma));
        out.points.push_back(SpherePoint::normalized(base - w * gamma));
    }
    return out;
}

namespace {

// Classification shared by the direct sweep; kept in gamma^2 form.
IntersectionCount direct_count(const std::vector<double>& za, const std::vector<double>& zb,
                               double c) {
    const double d = 1.0 - c * c;
    IntersectionCount out;
    for (double s : za) {
        for (double t : zb) {
            const double alpha = (s - c * t) / d;
            const double beta = (t - c * s) / d;
            const double gamma2 = 1.0 - (alpha * alpha + beta * beta + 2.0 * alpha * beta * c);
            if (std::abs(gamma2) < kTangencyTol)
                ++out.boundary;
            else if (gamma2 > 0.0)
                ++out.interior;
        }
    }
    return out;
}

} // namespace

IntersectionCount count_common_zeros_direct(const SpherePoint& a, const SpherePoint& b,
                                            int degree) {
    const double c = dot(a.vec(), b.vec());
    if (std::abs(c) > 1.0 - kParallelTol)
        throw ParallelAxesError("count_common_zeros_direct: axes too close to parallel");
    const auto za = legendre_zeros(degree).zeros;
    return direct_count(za, za, c);
}

std::vector<SpherePoint> zonal_common_zeros(const SpherePoint& a, const SpherePoint& b,
                                            int degree) {
    const auto ca = nodal_circles(a, degree);
    const auto cb = nodal_circles(b, degree);
    std::vector<SpherePoint> out;
    for (const auto& c1 : ca)
        for (const auto& c2 : cb) {
            const auto hit = circle_pair_intersections(c1, c2);
            out.insert(out.end(), hit.points.begin(), hit.points.end());
        }
    return out;
}

ChordDiagram chord_diagram(const SpherePoint& a, const SpherePoint& b, int degree) {
    const double c = std::clamp(dot(a.vec(), b.vec()), -1.0, 1.0);
    if (std::abs(c) > 1.0 - kParallelTol)
        throw ParallelAxesError("chord_diagram: axes too close to parallel");
    ChordDiagram d;
    d.axis_angle = std::acos(c);
    d.chords_a = legendre_zeros(degree).zeros;
    d.chords_b = d.chords_a;
    return d;
}

IntersectionCount chord_model_count(const ChordDiagram& d) {
    const double c = std::cos(d.axis_angle), s = std::sin(d.axis_angle);
    if (std::abs(s) < 1e-14)
        throw ParallelAxesError("chord_model_count: chord families parallel");

    // In plane coordinates with a = (1, 0), b = (c, s): the chords <p,a> = x_j and
    // <p,b> = x_k meet at p = (x_j, (x_k - c x_j)/s).
    IntersectionCount out;
    for (double xj : d.chords_a) {
        for (double xk : d.chords_b) {
            const double py = (xk - c * xj) / s;
            const double r2 = xj * xj + py * py;
            const double margin = 1.0 - r2;
            if (std::abs(margin) < kTangencyTol)
                ++out.boundary;
            else if (margin > 0.0)
                ++out.interior;
        }
    }
    return out;
}

IntersectionCount chord_model_count(const SpherePoint& a, const SpherePoint& b, int degree) {
    return chord_model_count(chord_diagram(a, b, degree));
}

std::vector<SweepRow> asymptotic_c_sweep(const std::vector<int>& degrees) {
    const SpherePoint a{Vec3{0, 0, 1}};
    const SpherePoint b{Vec3{1, 0, 0}};
    std::vector<SweepRow> rows;
    rows.reserve(degrees.size());
    for (int n : degrees) {
        const auto count = chord_model_count(a, b, n);
        SweepRow r;
        r.degree = n;
        r.angle = 0.5 * kPi;
        r.interior = count.interior;
        r.boundary = count.boundary;
        r.total = count.total_sphere();
        r.ratio = static_cast<double>(r.total) / (static_cast<double>(n) * n);
        rows.push_back(r);
    }
    return rows;
}

double asymptotic_c_oracle(int degree) {
    const auto z = legendre_zeros(degree).zeros;
    long long inside = 0;
    for (double xj : z)
        for (double xk : z)
            if (xj * xj + xk * xk < 1.0) ++inside;
    return 2.0 * static_cast<double>(inside) / (static_cast<double>(degree) * degree);
}

} // namespace nodallab
