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
#pragma once

#include <subdiv_iga/types.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace subdiv_iga {

/// Undirected mesh edge with its (at most two) incident faces.
struct Edge
{
    int v0 = -1;
    int v1 = -1;
    int face0 = -1;
    int face1 = -1; ///< -1 for boundary edges

    bool is_boundary() const { return face1 < 0; }
};

/// A face together with the local corner index of a vertex in that face.
struct FaceCorner
{
    int face = -1;
    int corner = -1;
};

///
/// Quad control mesh.
///
/// Topology is validated on construction (quads only, manifold edges,
/// consistent orientation, interior valence >= 3) and is immutable afterwards.
/// Vertex positions can be swapped with `with_vertices`, which shares the
/// topology tables with the original mesh.
///
class ControlMesh
{
public:
    ControlMesh() = default;

    /// Throws MeshError if any invariant is violated.
    ControlMesh(std::vector<Vec3> vertices, std::vector<Quad> faces);

    int num_vertices() const { return static_cast<int>(m_vertices.size()); }
    int num_faces() const;
    int num_edges() const;
    int num_boundary_edges() const;

    const std::vector<Vec3>& vertices() const { return m_vertices; }
    const Vec3& vertex(int v) const { return m_vertices[static_cast<std::size_t>(v)]; }
    const std::vector<Quad>& faces() const;
    const Quad& face(int f) const;

    /// Number of faces incident to `v`.
    int valence(int v) const;
    bool is_boundary_vertex(int v) const;
    /// Interior vertex whose valence differs from 4.
    bool is_extraordinary(int v) const;
    std::vector<int> extraordinary_vertices() const;

    std::span<const int> vertex_faces(int v) const;

    const std::vector<Edge>& edges() const;
    const Edge& edge(int e) const;
    /// Edge id of the undirected edge {a, b}, or -1.
    int find_edge(int a, int b) const;
    /// Edge id of the face edge running from corner `c` to corner `c+1`.
    int face_edge(int f, int c) const;

    /// Face containing the directed edge from -> to, with the corner index of `from`.
    std::optional<FaceCorner> face_with_half_edge(int from, int to) const;

    /// Same topology, new positions (size must match).
    ControlMesh with_vertices(std::vector<Vec3> vertices) const;

    bool same_topology(const ControlMesh& other) const { return m_topology == other.m_topology; }

private:
    struct Topology;

    std::vector<Vec3> m_vertices;
    std::shared_ptr<const Topology> m_topology;
};

/// Reads `v` and `f` records; other record types are skipped and reported in `warnings`.
ControlMesh load_obj(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Writes vertices with 17 significant digits so that load_obj reproduces them bitwise.
void save_obj(const ControlMesh& mesh, const std::filesystem::path& path);

} // namespace subdiv_iga
