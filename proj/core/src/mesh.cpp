#include "nodallab/mesh.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace nodallab {

TriMesh::TriMesh(Kind kind, std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles)
    : kind_(kind), vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
    std::map<std::pair<int, int>, int> edge_id;
    tri_edges_.resize(triangles_.size());
    for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
        const auto& tri = triangles_[t];
        for (int e = 0; e < 3; ++e) {
            int i = tri[e], j = tri[(e + 1) % 3];
            if (i > j) std::swap(i, j);
            auto [it, inserted] = edge_id.try_emplace({i, j}, static_cast<int>(edges_.size()));
            if (inserted) {
                edges_.push_back({i, j});
                edge_tris_.push_back({t, -1});
            } else {
                auto& owners = edge_tris_[it->second];
                if (owners[1] != -1)
                    throw DomainError("TriMesh: edge borders more than two triangles");
                owners[1] = t;
            }
            tri_edges_[t][e] = it->second;
        }
    }
    for (const auto& owners : edge_tris_)
        if (owners[1] == -1) throw DomainError("TriMesh: boundary edge in a closed mesh");

    neighbors_.resize(vertices_.size());
    for (const auto& e : edges_) {
        neighbors_[e[0]].push_back(e[1]);
        neighbors_[e[1]].push_back(e[0]);
    }
}

TriMesh icosphere(int subdivisions) {
    if (subdivisions < 0) throw DomainError("icosphere: negative subdivision count");
    if (subdivisions > kMaxSubdivisions)
        throw ResourceError("icosphere: subdivisions above desk-scale cap " +
                            std::to_string(kMaxSubdivisions));

    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> verts = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    for (auto& v : verts) v = normalized(v);
    std::vector<std::array<int, 3>> tris = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<int, int>, int> midpoint;
        const auto mid = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            auto [it, inserted] = midpoint.try_emplace({i, j}, static_cast<int>(verts.size()));
            if (inserted) verts.push_back(normalized(verts[i] + verts[j]));
            return it->second;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& tr : tris) {
            const int a = mid(tr[0], tr[1]), b = mid(tr[1], tr[2]), c = mid(tr[2], tr[0]);
            next.push_back({tr[0], a, c});
            next.push_back({tr[1], b, a});
            next.push_back({tr[2], c, b});
            next.push_back({a, b, c});
        }
        tris = std::move(next);
    }
    return TriMesh(TriMesh::Kind::sphere, std::move(verts), std::move(tris));
}

TriMesh torus_mesh(int resolution) {
    if (resolution < 3) throw DomainError("torus_mesh: resolution must be >= 3");
    if (resolution > 512) throw ResourceError("torus_mesh: resolution above desk-scale cap 512");

    const double step = 2.0 * kPi / resolution;
    std::vector<Vec3> verts;
    verts.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) verts.push_back({i * step, j * step, 0.0});

    const auto id = [resolution](int i, int j) {
        return ((i % resolution + resolution) % resolution) * resolution +
               ((j % resolution + resolution) % resolution);
    };
    std::vector<std::array<int, 3>> tris;
    tris.reserve(2u * resolution * resolution);
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
            tris.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    return TriMesh(TriMesh::Kind::torus, std::move(verts), std::move(tris));
}

} // namespace nodallab
