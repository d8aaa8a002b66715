#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "nodallab/circles.hpp"
#include "nodallab/harmonics.hpp"
#include "nodallab/mesh.hpp"

namespace nodallab {

inline constexpr double kDefaultGradFloor = 1e-6;
inline constexpr double kContourResidualBound = 1e-9;
inline constexpr double kCertTol = 1e-8;

/// Samples with |v| below this count as lying on the zero set of v.
inline constexpr double kInfiniteZeroTol = 1e-12;

/// Fraction of near-zero samples that triggers the INFINITE_ZERO_SET flag.
/// Heuristic threshold; the parallel-circle families sit at 100%.
inline constexpr double kInfiniteZeroFraction = 0.9;

/// Closed polyline on S^2 approximating one component of the nodal set of `owner`.
/// First/last vertices are adjacent. Construction checks max |owner| < 1e-9 over the
/// vertices and, when grad_floor > 0, that no vertex is a critical point.
class SphereContour {
public:
    SphereContour(std::vector<SpherePoint> vertices, Eigenfunction owner,
                  double grad_floor = kDefaultGradFloor);

    const std::vector<SpherePoint>& vertices() const { return vertices_; }
    const Eigenfunction& owner() const { return owner_; }
    double max_residual() const { return max_residual_; }
    double min_gradient() const { return min_gradient_; }

    /// Straight-segment length of the closed polyline.
    double length() const;

    /// Set when the contour is an exactly parametrized circle.
    const std::optional<NodalCircle>& exact_circle() const { return circle_; }
    void set_exact_circle(const NodalCircle& c) { circle_ = c; }

private:
    std::vector<SpherePoint> vertices_;
    Eigenfunction owner_;
    double max_residual_ = 0.0;
    double min_gradient_ = 0.0;
    std::optional<NodalCircle> circle_;
};

/// Uniform parametrization of a circle on S^2.
std::vector<SpherePoint> circle_points(const NodalCircle& c, int samples);

/// Exact circle contour of the zonal harmonic with the circle's axis.
SphereContour trace_zonal_contour(const NodalCircle& c, int samples, int degree,
                                  double grad_floor = kDefaultGradFloor);

struct TraceOptions {
    double grad_floor = kDefaultGradFloor;
    double vertex_floor_scale = 1e-9; // dead band relative to max |u| over the mesh
    double refine_target = 1e-13;     // Newton stop; the contract bound stays 1e-9
    int max_newton = 30;
};

/// Marching-triangles extraction of the nodal set of u, each crossing Newton-refined
/// along the gradient. Loops come back as disjoint simple closed polylines. Throws
/// CriticalLevelError when zero fails to be a regular value at mesh resolution
/// (refinement stalls, or a loop hops the gap of a near-critical saddle).
std::vector<SphereContour> trace_contours_mesh(const Eigenfunction& u, const TriMesh& mesh,
                                               const TraceOptions& opt = {});

struct CommonZero {
    SpherePoint point;
    double abs_u = 0.0;
    double abs_v = 0.0;
};

struct SignChangeScan {
    bool infinite_zero_set = false;
    int sign_changes = 0;          // even around a closed loop
    std::vector<CommonZero> zeros; // refined and certified below kCertTol
};

/// Sign changes of v around the closed contour of u, each bracket bisected along the
/// polyline and polished by a tangent-plane Newton step on the pair (u, v).
SignChangeScan sign_changes_along(const Eigenfunction& v, const SphereContour& c);

struct CommonZeroSearchResult {
    std::vector<CommonZero> zeros;
    std::vector<int> infinite_contours; // contour indices flagged INFINITE_ZERO_SET
    int contour_count = 0;

    /// Empty search output; a test failure, never an accepted outcome.
    bool theorem_violation() const { return zeros.empty() && infinite_contours.empty(); }
};

/// Certified common zeros of u and v: union of sign_changes_along over the contours of u.
CommonZeroSearchResult common_zero_search(const Eigenfunction& u, const Eigenfunction& v,
                                          const TriMesh& mesh, const TraceOptions& opt = {});

/// Contour resampled uniformly by arclength with the positive weight q = |grad u|
/// (the normal-derivative magnitude on a nodal contour) and trapezoid weights ds.
struct ContourMeasure {
    std::vector<SpherePoint> points;
    std::vector<double> q;
    std::vector<double> ds;
};

ContourMeasure contour_measure(const Eigenfunction& u, const SphereContour& c, int samples = 0,
                               double grad_floor = kDefaultGradFloor);

/// Integral of v q ds over a contour of u; vanishes for v in the same eigenspace.
double ortho_integral(const Eigenfunction& u, const SphereContour& c, const Eigenfunction& v,
                      int samples = 0);

/// ortho_integral against every basis function of the given degree in one sweep,
/// indexed m + basis_degree.
std::vector<double> basis_ortho_integrals(const Eigenfunction& u, const SphereContour& c,
                                          int basis_degree, int samples = 0);

/// CSV rows (loop, theta, phi) over all contours.
void write_contours_csv(std::ostream& os, const std::vector<SphereContour>& contours);

/// CSV rows (theta, phi, abs_u, abs_v) for certified common zeros.
void write_zeros_csv(std::ostream& os, const std::vector<CommonZero>& zeros);

} // namespace nodallab
