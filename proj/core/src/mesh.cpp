/*
 * Copyright 2026 The subdiv-iga Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include <subdiv_iga/mesh.hpp>

#include <algorithm>
#include <string>

namespace subdiv_iga {

struct ControlMesh::Topology
{
    std::vector<Quad> faces;
    std::vector<int> vf_offsets;
    std::vector<int> vf_faces;
    std::vector<Edge> edges;
    std::vector<std::array<int, 4>> face_edges;
    std::unordered_map<std::uint64_t, int> edge_lookup;
    std::unordered_map<std::uint64_t, int> half_edges; // directed key -> 4 * face + corner
    std::vector<char> boundary_vertex;
    int num_boundary_edges = 0;
    std::uint64_t n = 0;

    std::uint64_t key(int a, int b) const
    {
        return static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b);
    }
    std::uint64_t undirected_key(int a, int b) const { return a < b ? key(a, b) : key(b, a); }
};

namespace {

const std::vector<Quad>& empty_faces()
{
    static const std::vector<Quad> faces;
    return faces;
}

const std::vector<Edge>& empty_edges()
{
    static const std::vector<Edge> edges;
    return edges;
}

std::string face_label(int f)
{
    return "face " + std::to_string(f);
}

} // namespace

ControlMesh::ControlMesh(std::vector<Vec3> vertices, std::vector<Quad> faces)
    : m_vertices(std::move(vertices))
{
    auto topo = std::make_shared<Topology>();
    const int nv = num_vertices();
    topo->n = static_cast<std::uint64_t>(nv);
    topo->faces = std::move(faces);
    const int nf = static_cast<int>(topo->faces.size());
    if (nf == 0) throw MeshError("mesh has no faces");

    for (int f = 0; f < nf; ++f) {
        const Quad& q = topo->faces[static_cast<std::size_t>(f)];
        for (int c = 0; c < 4; ++c) {
            if (q[c] < 0 || q[c] >= nv)
                throw MeshError(face_label(f) + " references vertex " + std::to_string(q[c]) +
                                " out of range");
            for (int d = 0; d < c; ++d)
                if (q[c] == q[d]) throw MeshError(face_label(f) + " has repeated vertex indices");
        }
    }

    // Undirected edges in order of first appearance; detect non-manifold edges first.
    topo->face_edges.resize(static_cast<std::size_t>(nf));
    for (int f = 0; f < nf; ++f) {
        const Quad& q = topo->faces[static_cast<std::size_t>(f)];
        for (int c = 0; c < 4; ++c) {
            const int a = q[c], b = q[(c + 1) % 4];
            auto [it, inserted] =
                topo->edge_lookup.emplace(topo->undirected_key(a, b), static_cast<int>(topo->edges.size()));
            if (inserted) {
                topo->edges.push_back(Edge{a, b, f, -1});
            } else {
                Edge& e = topo->edges[static_cast<std::size_t>(it->second)];
                if (e.face1 >= 0)
                    throw MeshError("non-manifold edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") shared by more than two faces, at " + face_label(f));
                e.face1 = f;
            }
            topo->face_edges[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)] = it->second;
            if (!topo->half_edges.emplace(topo->key(a, b), 4 * f + c).second)
                throw MeshError("inconsistent orientation: directed edge (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") appears twice, at " + face_label(f));
        }
    }

    topo->boundary_vertex.assign(static_cast<std::size_t>(nv), 0);
    for (const Edge& e : topo->edges) {
        if (e.is_boundary()) {
            ++topo->num_boundary_edges;
            topo->boundary_vertex[static_cast<std::size_t>(e.v0)] = 1;
            topo->boundary_vertex[static_cast<std::size_t>(e.v1)] = 1;
        }
    }

    std::vector<int> counts(static_cast<std::size_t>(nv), 0);
    for (const Quad& q : topo->faces)
        for (int v : q) ++counts[static_cast<std::size_t>(v)];
    topo->vf_offsets.assign(static_cast<std::size_t>(nv) + 1, 0);
    for (int v = 0; v < nv; ++v)
        topo->vf_offsets[static_cast<std::size_t>(v) + 1] =
            topo->vf_offsets[static_cast<std::size_t>(v)] + counts[static_cast<std::size_t>(v)];
    topo->vf_faces.resize(static_cast<std::size_t>(topo->vf_offsets.back()));
    std::vector<int> fill(topo->vf_offsets.begin(), topo->vf_offsets.end() - 1);
    for (int f = 0; f < nf; ++f)
        for (int v : topo->faces[static_cast<std::size_t>(f)])
            topo->vf_faces[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = f;

    // Each vertex must have a single fan of faces around it.
    for (int v = 0; v < nv; ++v) {
        const int valence = counts[static_cast<std::size_t>(v)];
        if (valence == 0) throw MeshError("vertex " + std::to_string(v) + " is not referenced by any face");
        const bool boundary = topo->boundary_vertex[static_cast<std::size_t>(v)] != 0;
        if (!boundary && valence < 3)
            throw MeshError("interior vertex " + std::to_string(v) + " has valence " + std::to_string(valence));

        auto corner_of = [&](int f) {
            const Quad& q = topo->faces[static_cast<std::size_t>(f)];
            return static_cast<int>(std::find(q.begin(), q.end(), v) - q.begin());
        };
        int start = topo->vf_faces[static_cast<std::size_t>(topo->vf_offsets[static_cast<std::size_t>(v)])];
        if (boundary) {
            start = -1;
            for (int i = topo->vf_offsets[static_cast<std::size_t>(v)];
                 i < topo->vf_offsets[static_cast<std::size_t>(v) + 1]; ++i) {
                const int f = topo->vf_faces[static_cast<std::size_t>(i)];
                const Quad& q = topo->faces[static_cast<std::size_t>(f)];
                const int next = q[(corner_of(f) + 1) % 4];
                if (!topo->half_edges.count(topo->key(next, v))) {
                    if (start >= 0)
                        throw MeshError("non-manifold vertex " + std::to_string(v) +
                                        " (more than one boundary fan)");
                    start = f;
                }
            }
        }
        int reached = 0;
        int f = start;
        do {
            ++reached;
            const Quad& q = topo->faces[static_cast<std::size_t>(f)];
            const int prev = q[(corner_of(f) + 3) % 4];
            auto it = topo->half_edges.find(topo->key(v, prev));
            if (it == topo->half_edges.end()) break;
            f = it->second / 4;
        } while (f != start && reached <= valence);
        if (reached != valence)
            throw MeshError("non-manifold vertex " + std::to_string(v) + " (faces do not form a single fan)");
    }

    m_topology = std::move(topo);
}

int ControlMesh::num_faces() const
{
    return m_topology ? static_cast<int>(m_topology->faces.size()) : 0;
}

int ControlMesh::num_edges() const
{
    return m_topology ? static_cast<int>(m_topology->edges.size()) : 0;
}

int ControlMesh::num_boundary_edges() const
{
    return m_topology ? m_topology->num_boundary_edges : 0;
}

const std::vector<Quad>& ControlMesh::faces() const
{
    return m_topology ? m_topology->faces : empty_faces();
}

const Quad& ControlMesh::face(int f) const
{
    return m_topology->faces.at(static_cast<std::size_t>(f));
}

int ControlMesh::valence(int v) const
{
    return m_topology->vf_offsets[static_cast<std::size_t>(v) + 1] -
           m_topology->vf_offsets[static_cast<std::size_t>(v)];
}

bool ControlMesh::is_boundary_vertex(int v) const
{
    return m_topology->boundary_vertex[static_cast<std::size_t>(v)] != 0;
}

bool ControlMesh::is_extraordinary(int v) const
{
    return !is_boundary_vertex(v) && valence(v) != 4;
}

std::vector<int> ControlMesh::extraordinary_vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (is_extraordinary(v)) out.push_back(v);
    return out;
}

std::span<const int> ControlMesh::vertex_faces(int v) const
{
    const auto b = static_cast<std::size_t>(m_topology->vf_offsets[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(m_topology->vf_offsets[static_cast<std::size_t>(v) + 1]);
    return {m_topology->vf_faces.data() + b, e - b};
}

const std::vector<Edge>& ControlMesh::edges() const
{
    return m_topology ? m_topology->edges : empty_edges();
}

const Edge& ControlMesh::edge(int e) const
{
    return m_topology->edges.at(static_cast<std::size_t>(e));
}

int ControlMesh::find_edge(int a, int b) const
{
    if (!m_topology || a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return -1;
    auto it = m_topology->edge_lookup.find(m_topology->undirected_key(a, b));
    return it == m_topology->edge_lookup.end() ? -1 : it->second;
}

int ControlMesh::face_edge(int f, int c) const
{
    return m_topology->face_edges[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
}

std::optional<FaceCorner> ControlMesh::face_with_half_edge(int from, int to) const
{
    if (!m_topology || from < 0 || to < 0 || from >= num_vertices() || to >= num_vertices())
        return std::nullopt;
    auto it = m_topology->half_edges.find(m_topology->key(from, to));
    if (it == m_topology->half_edges.end()) return std::nullopt;
    return FaceCorner{it->second / 4, it->second % 4};
}

ControlMesh ControlMesh::with_vertices(std::vector<Vec3> vertices) const
{
    if (vertices.size() != m_vertices.size())
        throw std::invalid_argument("with_vertices: expected " + std::to_string(m_vertices.size()) +
                                    " vertices, got " + std::to_string(vertices.size()));
    ControlMesh out;
    out.m_vertices = std::move(vertices);
    out.m_topology = m_topology;
    return out;
}

} // namespace subdiv_iga
