#pragma once

#include <vector>

#include "nodallab/geometry.hpp"
#include "nodallab/legendre.hpp"

namespace nodallab {

/// Tangency window on gamma^2 = 1 - |p|^2; both counting routes share it.
inline constexpr double kTangencyTol = 1e-10;

/// Axes closer to parallel than this are rejected.
inline constexpr double kParallelTol = 1e-12;

/// One component of the nodal set of a zonal harmonic: {x : <x, axis> = height}.
struct NodalCircle {
    SpherePoint axis;
    double height = 0.0;

    NodalCircle(const SpherePoint& a, double h) : axis(a), height(h) {
        if (std::abs(h) >= 1.0) throw DomainError("NodalCircle: |height| must be < 1");
    }
};

/// The n nodal circles of x -> P_n(<x, axis>), heights ascending.
std::vector<NodalCircle> nodal_circles(const SpherePoint& axis, int degree);

struct CirclePairIntersection {
    std::vector<SpherePoint> points; // 0, 1 or 2
    bool tangent = false;            // |gamma^2| < kTangencyTol, counted once
};

/// Closed-form intersection of two circles with independent axes.
CirclePairIntersection circle_pair_intersections(const NodalCircle& c1, const NodalCircle& c2);

/// Common-zero count split as the chord model sees it: crossings strictly inside
/// the disc lift to symmetric point pairs, boundary crossings to single points.
struct IntersectionCount {
    long long interior = 0;
    long long boundary = 0;
    long long total_sphere() const { return 2 * interior + boundary; }
};

/// n(a,b) by summing circle_pair_intersections over all n^2 circle pairs.
IntersectionCount count_common_zeros_direct(const SpherePoint& a, const SpherePoint& b, int degree);

/// All intersection points of the two zonal nodal sets (for membership checks and plots).
std::vector<SpherePoint> zonal_common_zeros(const SpherePoint& a, const SpherePoint& b, int degree);

/// Projection model: two chord families of the unit disc in the plane through a and b.
struct ChordDiagram {
    double axis_angle = 0.0;              // angle between a and b
    std::vector<double> chords_a, chords_b; // heights (Legendre zeros)
};

ChordDiagram chord_diagram(const SpherePoint& a, const SpherePoint& b, int degree);

/// n(a,b) by counting pairwise chord crossings in the disc; total = 2*interior + boundary.
IntersectionCount chord_model_count(const ChordDiagram& d);
IntersectionCount chord_model_count(const SpherePoint& a, const SpherePoint& b, int degree);

struct SweepRow {
    int degree = 0;
    double angle = 0.0;
    long long interior = 0;
    long long boundary = 0;
    long long total = 0;
    double ratio = 0.0; // total / degree^2
};

/// Ratio table n(a,b)/n^2 for perpendicular axes.
std::vector<SweepRow> asymptotic_c_sweep(const std::vector<int>& degrees);

/// Independent route to the same ratio: 2 * #{(j,k) : x_j^2 + x_k^2 < 1} / n^2
/// enumerated straight from the zeros.
double asymptotic_c_oracle(int degree);

} // namespace nodallab
