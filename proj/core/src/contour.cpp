#include "nodallab/contour.hpp"

#include "nodallab/csv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace nodallab {

namespace {

// One-dimensional Newton along the gradient direction, keeping the point on S^2.
// Returns the refined point; throws CriticalLevelError when the gradient dies or
// the residual refuses to drop below the contract bound.
SpherePoint project_to_nodal(const Eigenfunction& u, SpherePoint p, double grad_floor,
                             double target, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        const double val = u(p);
        if (std::abs(val) < target) return p;
        const Vec3 g = u.surface_gradient(p);
        const double g2 = dot(g, g);
        if (g2 < grad_floor * grad_floor)
            throw CriticalLevelError("contour refinement hit a gradient-degenerate point");
        p = SpherePoint::normalized(p.vec() - g * (val / g2));
    }
    if (std::abs(u(p)) >= kContourResidualBound)
        throw CriticalLevelError("contour refinement stalled above the residual bound");
    return p;
}

} // namespace

SphereContour::SphereContour(std::vector<SpherePoint> vertices, Eigenfunction owner,
                             double grad_floor)
    : vertices_(std::move(vertices)), owner_(std::move(owner)) {
    if (vertices_.size() < 3) throw DomainError("SphereContour: need at least 3 vertices");
    max_residual_ = 0.0;
    min_gradient_ = std::numeric_limits<double>::infinity();
    std::vector<Vec3> grads;
    grads.reserve(vertices_.size());
    for (const auto& p : vertices_) {
        max_residual_ = std::max(max_residual_, std::abs(owner_(p)));
        grads.push_back(owner_.surface_gradient(p));
        min_gradient_ = std::min(min_gradient_, norm(grads.back()));
    }
    if (max_residual_ >= kContourResidualBound)
        throw DomainError("SphereContour: vertex residual above 1e-9");
    if (grad_floor > 0.0) {
        if (min_gradient_ <= grad_floor)
            throw CriticalLevelError("SphereContour: critical point on the contour");
        // The gradient direction turns continuously along one component; a sign flip
        // between neighbours means the polyline hopped a nodal gap at a near-saddle,
        // i.e. zero is numerically a critical value at mesh resolution.
        for (std::size_t i = 0; i < grads.size(); ++i)
            if (dot(grads[i], grads[(i + 1) % grads.size()]) < 0.0)
                throw CriticalLevelError("SphereContour: gradient flip between neighbours "
                                         "(nodal gap hopped at a near-critical point)");
    }
}

double SphereContour::length() const {
    double len = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i].vec();
        const auto& b = vertices_[(i + 1) % vertices_.size()].vec();
        len += norm(b - a);
    }
    return len;
}

std::vector<SpherePoint> circle_points(const NodalCircle& c, int samples) {
    if (samples < 16) throw DomainError("circle_points: need at least 16 samples");
    const auto [e1, e2] = orthonormal_frame(c.axis.vec());
    const Vec3 center = c.axis.vec() * c.height;
    const double r = std::sqrt(1.0 - c.height * c.height);
    std::vector<SpherePoint> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * kPi * i / samples;
        pts.push_back(SpherePoint::normalized(center + e1 * (r * std::cos(t)) + e2 * (r * std::sin(t))));
    }
    return pts;
}

SphereContour trace_zonal_contour(const NodalCircle& c, int samples, int degree,
                                  double grad_floor) {
    auto owner = Eigenfunction::zonal_from_axis(c.axis, degree);
    SphereContour contour(circle_points(c, samples), std::move(owner), grad_floor);
    contour.set_exact_circle(c);
    return contour;
}

std::vector<SphereContour> trace_contours_mesh(const Eigenfunction& u, const TriMesh& mesh,
                                               const TraceOptions& opt) {
    if (mesh.kind() != TriMesh::Kind::sphere)
        throw DomainError("trace_contours_mesh: sphere mesh required");

    const int nv = mesh.vertex_count();
    std::vector<double> vals(nv);
    double vmax = 0.0;
    for (int i = 0; i < nv; ++i) {
        vals[i] = u(SpherePoint::normalized(mesh.vertices()[i]));
        vmax = std::max(vmax, std::abs(vals[i]));
    }
    if (vmax == 0.0) throw DegenerateError("trace_contours_mesh: function vanishes on the mesh");
    const double floor = opt.vertex_floor_scale * vmax;

    // Regular-value precondition at mesh resolution.
    for (int i = 0; i < nv; ++i) {
        if (std::abs(vals[i]) < floor) {
            const double g = norm(u.surface_gradient(SpherePoint::normalized(mesh.vertices()[i])));
            if (g < opt.grad_floor)
                throw CriticalLevelError("trace_contours_mesh: zero is a critical value "
                                         "at mesh resolution");
        }
    }

    // Dead-band vertices count as positive so every triangle has 0 or 2 crossing edges.
    std::vector<int> sign(nv);
    for (int i = 0; i < nv; ++i) sign[i] = vals[i] < -floor ? -1 : 1;

    const int ne = mesh.edge_count();
    std::vector<int> crossing_id(ne, -1);
    std::vector<SpherePoint> crossing_pt;
    std::vector<int> crossing_edge;
    for (int e = 0; e < ne; ++e) {
        const auto [i, j] = mesh.edges()[e];
        if (sign[i] * sign[j] >= 0) continue;
        const double t = vals[i] / (vals[i] - vals[j]);
        const Vec3 p = mesh.vertices()[i] * (1.0 - t) + mesh.vertices()[j] * t;
        crossing_id[e] = static_cast<int>(crossing_pt.size());
        crossing_pt.push_back(SpherePoint::normalized(p));
        crossing_edge.push_back(e);
    }

    // In every triangle the two crossing edges pair up; each crossing then has
    // exactly two neighbours and the crossings split into disjoint cycles.
    std::vector<std::array<int, 2>> neighbor(crossing_pt.size(), {-1, -1});
    const auto add_neighbor = [&](int a, int b) {
        auto& slots = neighbor[a];
        if (slots[0] == -1) slots[0] = b;
        else slots[1] = b;
    };
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        int found[3], cnt = 0;
        for (int e : mesh.triangle_edges(t))
            if (crossing_id[e] != -1) found[cnt++] = crossing_id[e];
        if (cnt == 0) continue;
        if (cnt != 2)
            throw CriticalLevelError("trace_contours_mesh: degenerate sign pattern in triangle");
        add_neighbor(found[0], found[1]);
        add_neighbor(found[1], found[0]);
    }

    std::vector<SphereContour> out;
    std::vector<char> visited(crossing_pt.size(), 0);
    for (int start = 0; start < static_cast<int>(crossing_pt.size()); ++start) {
        if (visited[start]) continue;
        std::vector<int> loop;
        int prev = -1, cur = start;
        do {
            visited[cur] = 1;
            loop.push_back(cur);
            const auto& nb = neighbor[cur];
            const int next = (nb[0] != prev) ? nb[0] : nb[1];
            prev = cur;
            cur = next;
        } while (cur != start && cur != -1);
        if (cur == -1 || loop.size() < 3)
            throw CriticalLevelError("trace_contours_mesh: open or degenerate loop");

        std::vector<SpherePoint> pts;
        pts.reserve(loop.size());
        for (int id : loop)
            pts.push_back(project_to_nodal(u, crossing_pt[id], opt.grad_floor, opt.refine_target,
                                           opt.max_newton));
        out.emplace_back(std::move(pts), u, opt.grad_floor);
    }
    return out;
}

namespace {

// Tangent-plane Newton on the pair (u, v); returns the final point.
SpherePoint joint_newton(const Eigenfunction& u, const Eigenfunction& v, SpherePoint p) {
    for (int it = 0; it < 25; ++it) {
        const double fu = u(p), fv = v(p);
        if (std::max(std::abs(fu), std::abs(fv)) < 1e-12) break;
        const auto [t1, t2] = orthonormal_frame(p.vec());
        const Vec3 gu = u.surface_gradient(p), gv = v.surface_gradient(p);
        const double a = dot(gu, t1), b = dot(gu, t2);
        const double c = dot(gv, t1), d = dot(gv, t2);
        const double det = a * d - b * c;
        if (std::abs(det) < 1e-14) break;
        double s1 = (-fu * d + fv * b) / det;
        double s2 = (-fv * a + fu * c) / det;
        const double step = std::hypot(s1, s2);
        if (step > 0.2) { // clamp to stay near the bracket
            s1 *= 0.2 / step;
            s2 *= 0.2 / step;
        }
        p = SpherePoint::normalized(p.vec() + t1 * s1 + t2 * s2);
    }
    return p;
}

} // namespace

SignChangeScan sign_changes_along(const Eigenfunction& v, const SphereContour& c) {
    const auto& pts = c.vertices();
    const int n = static_cast<int>(pts.size());
    std::vector<double> vals(n);
    int below = 0;
    for (int i = 0; i < n; ++i) {
        vals[i] = v(pts[i]);
        if (std::abs(vals[i]) < kInfiniteZeroTol) ++below;
    }

    SignChangeScan scan;
    if (below >= static_cast<int>(kInfiniteZeroFraction * n)) {
        scan.infinite_zero_set = true;
        return scan;
    }

    const Eigenfunction& u = c.owner();
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const int si = vals[i] < 0.0 ? -1 : 1;
        const int sj = vals[j] < 0.0 ? -1 : 1;
        if (si == sj) continue;
        ++scan.sign_changes;

        // Bisection along the polyline arc on the sign of v.
        Vec3 lo = pts[i].vec(), hi = pts[j].vec();
        double flo = vals[i];
        double gap = norm(hi - lo);
        while (gap > 1e-6) {
            const Vec3 mid = slerp(lo, hi, 0.5);
            const double fm = v(SpherePoint::normalized(mid));
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
            gap *= 0.5;
        }
        const SpherePoint refined =
            joint_newton(u, v, SpherePoint::normalized(slerp(lo, hi, 0.5)));
        const double au = std::abs(u(refined)), av = std::abs(v(refined));
        if (au < kCertTol && av < kCertTol) scan.zeros.push_back({refined, au, av});
    }
    return scan;
}

CommonZeroSearchResult common_zero_search(const Eigenfunction& u, const Eigenfunction& v,
                                          const TriMesh& mesh, const TraceOptions& opt) {
    if (u.degree() != v.degree())
        throw DomainError("common_zero_search: eigenfunctions of different degree");
    if (u.degree() < 1) throw DomainError("common_zero_search: degree must be >= 1");

    CommonZeroSearchResult result;
    const auto contours = trace_contours_mesh(u, mesh, opt);
    result.contour_count = static_cast<int>(contours.size());
    for (int i = 0; i < static_cast<int>(contours.size()); ++i) {
        const auto scan = sign_changes_along(v, contours[i]);
        if (scan.infinite_zero_set) {
            result.infinite_contours.push_back(i);
            continue;
        }
        result.zeros.insert(result.zeros.end(), scan.zeros.begin(), scan.zeros.end());
    }
    return result;
}

namespace {

struct DensePolyline {
    std::vector<Vec3> pts;
    std::vector<double> cum; // cumulative chord length, size pts.size() + 1
};

// Upsample the loop once so the arclength table is accurate; every point stays on
// the curve. The costly Newton projections happen here, shared by all resamples.
DensePolyline densify(const Eigenfunction& u, const SphereContour& c, double grad_floor) {
    DensePolyline d;
    for (const auto& p : c.vertices()) d.pts.push_back(p.vec());
    const double target = 0.01;
    for (int round = 0; round < 6; ++round) {
        double longest = 0.0;
        for (std::size_t i = 0; i < d.pts.size(); ++i)
            longest = std::max(longest, norm(d.pts[(i + 1) % d.pts.size()] - d.pts[i]));
        if (longest <= target) break;
        std::vector<Vec3> next;
        next.reserve(d.pts.size() * 2);
        for (std::size_t i = 0; i < d.pts.size(); ++i) {
            const Vec3& a = d.pts[i];
            const Vec3& b = d.pts[(i + 1) % d.pts.size()];
            next.push_back(a);
            const SpherePoint mid = project_to_nodal(
                u, SpherePoint::normalized(slerp(a, b, 0.5)), grad_floor, 1e-13, 30);
            next.push_back(mid.vec());
        }
        d.pts = std::move(next);
    }
    d.cum.assign(d.pts.size() + 1, 0.0);
    for (std::size_t i = 0; i < d.pts.size(); ++i)
        d.cum[i + 1] = d.cum[i] + norm(d.pts[(i + 1) % d.pts.size()] - d.pts[i]);
    return d;
}

std::vector<SpherePoint> resample_uniform(const Eigenfunction& u, const DensePolyline& d,
                                          int samples, double grad_floor) {
    const double total = d.cum.back();
    std::vector<SpherePoint> out;
    out.reserve(samples);
    std::size_t seg = 0;
    for (int k = 0; k < samples; ++k) {
        const double s = total * k / samples;
        while (seg + 1 < d.pts.size() && d.cum[seg + 1] <= s) ++seg;
        const double t =
            (s - d.cum[seg]) / std::max(d.cum[seg + 1] - d.cum[seg], 1e-300);
        const Vec3 p = slerp(d.pts[seg], d.pts[(seg + 1) % d.pts.size()], t);
        out.push_back(project_to_nodal(u, SpherePoint::normalized(p), grad_floor, 1e-13, 30));
    }
    return out;
}

ContourMeasure measure_from_points(const Eigenfunction& u, std::vector<SpherePoint> points,
                                   double grad_floor) {
    ContourMeasure m;
    m.points = std::move(points);
    const int n = static_cast<int>(m.points.size());
    m.q.resize(n);
    m.ds.resize(n);
    for (int i = 0; i < n; ++i) {
        m.q[i] = norm(u.surface_gradient(m.points[i]));
        if (m.q[i] < grad_floor)
            throw CriticalLevelError("contour_measure: q below the gradient floor");
    }
    for (int i = 0; i < n; ++i) {
        const Vec3& prev = m.points[(i + n - 1) % n].vec();
        const Vec3& next = m.points[(i + 1) % n].vec();
        m.ds[i] = 0.5 * (norm(m.points[i].vec() - prev) + norm(next - m.points[i].vec()));
    }
    return m;
}

} // namespace

ContourMeasure contour_measure(const Eigenfunction& u, const SphereContour& c, int samples,
                               double grad_floor) {
    if (samples <= 0)
        samples = c.exact_circle() ? std::max(128, 8 * (u.degree() + 1) + 8) : 4096;
    if (c.exact_circle())
        return measure_from_points(u, circle_points(*c.exact_circle(), samples), grad_floor);
    const auto dense = densify(u, c, grad_floor);
    return measure_from_points(u, resample_uniform(u, dense, samples, grad_floor), grad_floor);
}

namespace {

double measure_integral(const Eigenfunction& v, const ContourMeasure& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.points.size(); ++i) acc += v(m.points[i]) * m.q[i] * m.ds[i];
    return acc;
}

std::vector<double> measure_basis_integrals(int degree, const ContourMeasure& m) {
    std::vector<double> acc(2 * degree + 1, 0.0);
    for (std::size_t i = 0; i < m.points.size(); ++i) {
        const auto vals = Eigenfunction::basis_values(degree, m.points[i]);
        const double w = m.q[i] * m.ds[i];
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * vals[k];
    }
    return acc;
}

} // namespace

double ortho_integral(const Eigenfunction& u, const SphereContour& c, const Eigenfunction& v,
                      int samples) {
    if (c.exact_circle()) {
        // Trapezoid on the exact circle integrates the trigonometric integrand exactly.
        if (samples <= 0) samples = std::max(128, 4 * (u.degree() + v.degree()) + 8);
        return measure_integral(v, contour_measure(u, c, samples));
    }
    // The trapezoid error on the resampled loop is cleanly O(1/N^2); one Richardson
    // step over a doubling removes it.
    if (samples <= 0) samples = 2048;
    const auto dense = densify(u, c, kDefaultGradFloor);
    const double coarse = measure_integral(
        v, measure_from_points(u, resample_uniform(u, dense, samples, kDefaultGradFloor),
                               kDefaultGradFloor));
    const double fine = measure_integral(
        v, measure_from_points(u, resample_uniform(u, dense, 2 * samples, kDefaultGradFloor),
                               kDefaultGradFloor));
    return (4.0 * fine - coarse) / 3.0;
}

std::vector<double> basis_ortho_integrals(const Eigenfunction& u, const SphereContour& c,
                                          int basis_degree, int samples) {
    if (c.exact_circle()) {
        if (samples <= 0) samples = std::max(128, 4 * (u.degree() + basis_degree) + 8);
        return measure_basis_integrals(basis_degree, contour_measure(u, c, samples));
    }
    if (samples <= 0) samples = 2048;
    const auto dense = densify(u, c, kDefaultGradFloor);
    const auto coarse = measure_basis_integrals(
        basis_degree, measure_from_points(u, resample_uniform(u, dense, samples, kDefaultGradFloor),
                                          kDefaultGradFloor));
    const auto fine = measure_basis_integrals(
        basis_degree,
        measure_from_points(u, resample_uniform(u, dense, 2 * samples, kDefaultGradFloor),
                            kDefaultGradFloor));
    std::vector<double> out(coarse.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
    return out;
}

void write_contours_csv(std::ostream& os, const std::vector<SphereContour>& contours) {
    CsvWriter csv(os);
    csv.header({"loop", "theta", "phi"});
    for (std::size_t k = 0; k < contours.size(); ++k) {
        for (const auto& p : contours[k].vertices()) {
            csv.field(static_cast<long long>(k));
            csv.field(p.theta());
            csv.field(p.phi());
            csv.end_row();
        }
    }
}

void write_zeros_csv(std::ostream& os, const std::vector<CommonZero>& zeros) {
    CsvWriter csv(os);
    csv.header({"theta", "phi", "abs_u", "abs_v"});
    for (const auto& z : zeros) {
        csv.field(z.point.theta());
        csv.field(z.point.phi());
        csv.field(z.abs_u);
        csv.field(z.abs_v);
        csv.end_row();
    }
}

} // namespace nodallab
