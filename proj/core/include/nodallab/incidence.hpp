#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "nodallab/harmonics.hpp"
#include "nodallab/mesh.hpp"

namespace nodallab {

inline constexpr double kVertexFloorScale = 1e-9; // dead band, relative to max |u|
inline constexpr double kCoverFloorScale = 1e-3;  // covering proxy, relative to max |u|

/// Nodal domains of a function sampled on mesh vertices: flood-filled same-sign
/// components of the vertices above the dead band.
struct NodalDomainSet {
    std::vector<int> domain_of;            // per vertex: domain id, or -1 below the dead band
    std::vector<std::vector<int>> domains; // vertex ids per domain
    std::vector<int> signs;                // +1 / -1 per domain
    double vertex_floor = 0.0;

    int count() const { return static_cast<int>(domains.size()); }
};

NodalDomainSet nodal_domains(std::span<const double> values, const TriMesh& mesh,
                             double floor_scale = kVertexFloorScale);
NodalDomainSet nodal_domains(const Eigenfunction& u, const TriMesh& mesh,
                             double floor_scale = kVertexFloorScale);

/// Vertex values of an eigenfunction over a sphere mesh.
std::vector<double> mesh_values(const Eigenfunction& u, const TriMesh& mesh);

/// Bipartite-labelled graph over the nodal domains of u and v; an edge marks a
/// shared mesh vertex. U-U and V-V edges are impossible by construction.
struct IncidenceGraph {
    int u_count = 0;
    int v_count = 0;
    std::vector<std::pair<int, int>> edges; // (u domain, v domain), sorted

    std::vector<int> u_degrees() const;
    std::vector<int> v_degrees() const;
};

IncidenceGraph build_incidence(const NodalDomainSet& du, const NodalDomainSet& dv);
IncidenceGraph build_incidence(const Eigenfunction& u, const Eigenfunction& v,
                               const TriMesh& mesh);

/// Discrete proxy for "the nodal domains of u and v cover M": no vertex lies in both
/// dead bands (norm-scaled cover floor) and no triangle carries a sign change of both
/// functions. The triangle test catches common zeros that fall between vertices.
bool check_covering(std::span<const double> u_values, std::span<const double> v_values,
                    const TriMesh& mesh, double cover_floor_scale = kCoverFloorScale);
bool check_covering(const Eigenfunction& u, const Eigenfunction& v, const TriMesh& mesh,
                    double cover_floor_scale = kCoverFloorScale);

/// Vertex-only variant of the covering proxy (no triangle test); resolution-sensitive.
bool check_covering_vertex_only(std::span<const double> u_values,
                                std::span<const double> v_values, const TriMesh& mesh,
                                double cover_floor_scale = kCoverFloorScale);

struct ProofConditionsReport {
    bool family_disjoint = false;  // (A): domains within each family pairwise disjoint
    bool no_containment = false;   // (B): no U subset of V, no V subset of U
    bool intersects_nodal = false; // every U meets the nodal set of v, and conversely
    bool covering = false;
    bool bipartite_edges = false; // (a): every edge joins the two families
    bool min_degree_two = false;  // (b): every vertex lies on at least two edges
    bool has_cycle = false;
    std::vector<int> cycle; // graph vertices (u ids, then v ids offset by u_count)
};

/// Checks the combinatorial conditions behind the covering argument. The cycle is the
/// shortest one through the first edge, found breadth-first.
ProofConditionsReport check_proof_conditions(const IncidenceGraph& g, const NodalDomainSet& du,
                                             const NodalDomainSet& dv, const TriMesh& mesh,
                                             std::span<const double> u_values,
                                             std::span<const double> v_values, bool covering);

/// Shortest cycle through edge index e, or empty when none exists.
std::vector<int> shortest_cycle_through_edge(const IncidenceGraph& g, int e);

/// Plain-text graph export: "U<i>"/"V<j>" vertex list plus edge list (DOT syntax).
void write_incidence_dot(std::ostream& os, const IncidenceGraph& g);

/// Per-vertex CSV (vertex id, domain id, sign).
void write_domains_csv(std::ostream& os, const NodalDomainSet& d);

} // namespace nodallab
