#include "nodallab/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <set>

namespace nodallab {

std::vector<double> mesh_values(const Eigenfunction& u, const TriMesh& mesh) {
    std::vector<double> vals(mesh.vertex_count());
    for (int i = 0; i < mesh.vertex_count(); ++i)
        vals[i] = u(SpherePoint::normalized(mesh.vertices()[i]));
    return vals;
}

NodalDomainSet nodal_domains(std::span<const double> values, const TriMesh& mesh,
                             double floor_scale) {
    const int nv = mesh.vertex_count();
    if (static_cast<int>(values.size()) != nv)
        throw DomainError("nodal_domains: value count does not match the mesh");

    double vmax = 0.0;
    for (double v : values) vmax = std::max(vmax, std::abs(v));
    if (vmax == 0.0) throw DegenerateError("nodal_domains: function vanishes on the mesh");

    NodalDomainSet out;
    out.vertex_floor = floor_scale * vmax;
    out.domain_of.assign(nv, -1);

    int dead = 0;
    for (double v : values)
        if (std::abs(v) <= out.vertex_floor) ++dead;
    if (2 * dead > nv)
        throw DegenerateError("nodal_domains: more than half of the vertices below the dead band");

    // Flood fill across edges joining same-sign vertices.
    for (int start = 0; start < nv; ++start) {
        if (out.domain_of[start] != -1 || std::abs(values[start]) <= out.vertex_floor) continue;
        const int id = out.count();
        const int sgn = values[start] > 0.0 ? 1 : -1;
        out.domains.emplace_back();
        out.signs.push_back(sgn);
        std::deque<int> queue{start};
        out.domain_of[start] = id;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            out.domains[id].push_back(v);
            for (int w : mesh.neighbors(v)) {
                if (out.domain_of[w] != -1 || std::abs(values[w]) <= out.vertex_floor) continue;
                if ((values[w] > 0.0 ? 1 : -1) != sgn) continue;
                out.domain_of[w] = id;
                queue.push_back(w);
            }
        }
        std::sort(out.domains[id].begin(), out.domains[id].end());
    }
    return out;
}

NodalDomainSet nodal_domains(const Eigenfunction& u, const TriMesh& mesh, double floor_scale) {
    return nodal_domains(mesh_values(u, mesh), mesh, floor_scale);
}

std::vector<int> IncidenceGraph::u_degrees() const {
    std::vector<int> d(u_count, 0);
    for (const auto& e : edges) ++d[e.first];
    return d;
}

std::vector<int> IncidenceGraph::v_degrees() const {
    std::vector<int> d(v_count, 0);
    for (const auto& e : edges) ++d[e.second];
    return d;
}

IncidenceGraph build_incidence(const NodalDomainSet& du, const NodalDomainSet& dv) {
    if (du.domain_of.size() != dv.domain_of.size())
        throw DomainError("build_incidence: domain sets from different meshes");
    std::set<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < du.domain_of.size(); ++v) {
        const int a = du.domain_of[v], b = dv.domain_of[v];
        if (a != -1 && b != -1) edges.insert({a, b});
    }
    IncidenceGraph g;
    g.u_count = du.count();
    g.v_count = dv.count();
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

IncidenceGraph build_incidence(const Eigenfunction& u, const Eigenfunction& v,
                               const TriMesh& mesh) {
    return build_incidence(nodal_domains(u, mesh), nodal_domains(v, mesh));
}

namespace {

bool triangle_has_sign_change(const TriMesh& mesh, std::span<const double> values, int t) {
    const auto& tri = mesh.triangles()[t];
    const bool p = values[tri[0]] > 0.0 || values[tri[1]] > 0.0 || values[tri[2]] > 0.0;
    const bool n = values[tri[0]] < 0.0 || values[tri[1]] < 0.0 || values[tri[2]] < 0.0;
    return p && n;
}

} // namespace

bool check_covering_vertex_only(std::span<const double> u_values,
                                std::span<const double> v_values, const TriMesh& mesh,
                                double cover_floor_scale) {
    double umax = 0.0, vmax = 0.0;
    for (double x : u_values) umax = std::max(umax, std::abs(x));
    for (double x : v_values) vmax = std::max(vmax, std::abs(x));
    const double fu = cover_floor_scale * umax, fv = cover_floor_scale * vmax;
    for (int i = 0; i < mesh.vertex_count(); ++i)
        if (std::abs(u_values[i]) <= fu && std::abs(v_values[i]) <= fv) return false;
    return true;
}

bool check_covering(std::span<const double> u_values, std::span<const double> v_values,
                    const TriMesh& mesh, double cover_floor_scale) {
    if (!check_covering_vertex_only(u_values, v_values, mesh, cover_floor_scale)) return false;
    for (int t = 0; t < mesh.triangle_count(); ++t)
        if (triangle_has_sign_change(mesh, u_values, t) &&
            triangle_has_sign_change(mesh, v_values, t))
            return false;
    return true;
}

bool check_covering(const Eigenfunction& u, const Eigenfunction& v, const TriMesh& mesh,
                    double cover_floor_scale) {
    return check_covering(mesh_values(u, mesh), mesh_values(v, mesh), mesh, cover_floor_scale);
}

std::vector<int> shortest_cycle_through_edge(const IncidenceGraph& g, int e) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) return {};
    const int total = g.u_count + g.v_count;
    std::vector<std::vector<int>> adj(total);
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
        if (k == e) continue; // remove the chosen edge, then find the shortest path back
        const int a = g.edges[k].first, b = g.u_count + g.edges[k].second;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    const int src = g.edges[e].first, dst = g.u_count + g.edges[e].second;
    std::vector<int> parent(total, -2);
    std::deque<int> queue{src};
    parent[src] = -1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (v == dst) break;
        for (int w : adj[v]) {
            if (parent[w] != -2) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if (parent[dst] == -2) return {};
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path; // closed by the removed edge: path.front() -- path.back()
}

ProofConditionsReport check_proof_conditions(const IncidenceGraph& g, const NodalDomainSet& du,
                                             const NodalDomainSet& dv, const TriMesh& mesh,
                                             std::span<const double> u_values,
                                             std::span<const double> v_values, bool covering) {
    ProofConditionsReport r;
    r.covering = covering;

    // (A): flood-fill components are maximal, so a vertex lies in at most one domain
    // per family; recheck against the per-vertex maps.
    r.family_disjoint = true;
    std::vector<int> seen_u(du.domain_of.size(), 0), seen_v(dv.domain_of.size(), 0);
    for (int d = 0; d < du.count(); ++d)
        for (int v : du.domains[d])
            if (seen_u[v]++) r.family_disjoint = false;
    for (int d = 0; d < dv.count(); ++d)
        for (int v : dv.domains[d])
            if (seen_v[v]++) r.family_disjoint = false;

    // (B): no containment between the families (vertex-set subset test).
    r.no_containment = true;
    for (int a = 0; a < du.count(); ++a) {
        for (int b = 0; b < dv.count(); ++b) {
            const auto& A = du.domains[a];
            const auto& B = dv.domains[b];
            const bool a_in_b = std::includes(B.begin(), B.end(), A.begin(), A.end());
            const bool b_in_a = std::includes(A.begin(), A.end(), B.begin(), B.end());
            if (a_in_b || b_in_a) r.no_containment = false;
        }
    }

    // Every U meets N_v (an interior edge of U crosses v, or a vertex of U falls in
    // v's dead band), and conversely.
    const auto meets_nodal = [&](const std::vector<int>& domain, const std::vector<int>& dmap,
                                 int id, std::span<const double> other,
                                 double other_floor) {
        for (int v : domain) {
            if (std::abs(other[v]) <= other_floor) return true;
            for (int w : mesh.neighbors(v))
                if (dmap[w] == id && other[v] * other[w] < 0.0) return true;
        }
        return false;
    };
    r.intersects_nodal = true;
    for (int a = 0; a < du.count(); ++a)
        if (!meets_nodal(du.domains[a], du.domain_of, a, v_values, dv.vertex_floor))
            r.intersects_nodal = false;
    for (int b = 0; b < dv.count(); ++b)
        if (!meets_nodal(dv.domains[b], dv.domain_of, b, u_values, du.vertex_floor))
            r.intersects_nodal = false;

    // (a) holds by construction: edges pair a U domain with a V domain.
    r.bipartite_edges = true;
    for (const auto& e : g.edges)
        if (e.first < 0 || e.first >= g.u_count || e.second < 0 || e.second >= g.v_count)
            r.bipartite_edges = false;

    const auto ud = g.u_degrees(), vd = g.v_degrees();
    r.min_degree_two = !ud.empty() && !vd.empty();
    for (int d : ud)
        if (d < 2) r.min_degree_two = false;
    for (int d : vd)
        if (d < 2) r.min_degree_two = false;

    r.cycle = shortest_cycle_through_edge(g, 0);
    r.has_cycle = !r.cycle.empty();
    return r;
}

void write_incidence_dot(std::ostream& os, const IncidenceGraph& g) {
    os << "graph incidence {\n";
    for (int i = 0; i < g.u_count; ++i) os << "  U" << i << " [family=U];\n";
    for (int j = 0; j < g.v_count; ++j) os << "  V" << j << " [family=V];\n";
    for (const auto& e : g.edges) os << "  U" << e.first << " -- V" << e.second << ";\n";
    os << "}\n";
}

void write_domains_csv(std::ostream& os, const NodalDomainSet& d) {
    os << "vertex,domain,sign\n";
    for (std::size_t v = 0; v < d.domain_of.size(); ++v) {
        const int id = d.domain_of[v];
        os << v << ',' << id << ',' << (id == -1 ? 0 : d.signs[id]) << '\n';
    }
}

} // namespace nodallab
