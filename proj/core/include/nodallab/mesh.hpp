#pragma once

#include <array>
#include <vector>

#include "nodallab/geometry.hpp"

namespace nodallab {

inline constexpr int kMaxSubdivisions = 8;

/// Closed orientable triangulated 2-manifold: every edge borders exactly two triangles.
/// Sphere meshes carry unit-norm vertex positions; torus meshes carry (s, t, 0) with
/// s, t in [0, 2pi).
class TriMesh {
public:
    enum class Kind { sphere, torus };

    TriMesh(Kind kind, std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles);

    Kind kind() const { return kind_; }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }

    /// The two triangles bordering edge e.
    const std::array<int, 2>& edge_triangles(int e) const { return edge_tris_[e]; }

    /// Vertex neighbourhood in the edge graph.
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

    /// The three edge ids of triangle t.
    const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[t]; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int euler_characteristic() const { return vertex_count() - edge_count() + triangle_count(); }

private:
    Kind kind_;
    std::vector<Vec3> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 2>> edge_tris_;
    std::vector<std::array<int, 3>> tri_edges_;
    std::vector<std::vector<int>> neighbors_;
};

/// Icosahedron-based geodesic sphere; 20 * 4^k triangles, chi = 2.
TriMesh icosphere(int subdivisions);

/// Flat [0, 2pi)^2 grid with wraparound; chi = 0.
TriMesh torus_mesh(int resolution);

} // namespace nodallab
