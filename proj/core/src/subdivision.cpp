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
#include <subdiv_iga/subdivision.hpp>

#include <string>

namespace subdiv_iga {

Eigen::MatrixXd subdivide_curve(const Eigen::MatrixXd& points)
{
    const Eigen::Index n = points.rows();
    if (n < 3) throw std::invalid_argument("subdivide_curve: need at least 3 points, got " + std::to_string(n));
    Eigen::MatrixXd out(2 * n - 1, points.cols());
    out.row(0) = points.row(0);
    out.row(2 * n - 2) = points.row(n - 1);
    for (Eigen::Index i = 1; i + 1 < n; ++i)
        out.row(2 * i) = 0.125 * points.row(i - 1) + 0.75 * points.row(i) + 0.125 * points.row(i + 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) out.row(2 * i + 1) = 0.5 * (points.row(i) + points.row(i + 1));
    return out;
}

ControlMesh subdivide_mesh(const ControlMesh& mesh)
{
    const int nv = mesh.num_vertices();
    const int ne = mesh.num_edges();
    const int nf = mesh.num_faces();
    std::vector<Vec3> out(static_cast<std::size_t>(nv + ne + nf), Vec3::Zero());

    std::vector<Vec3> face_points(static_cast<std::size_t>(nf));
    for (int f = 0; f < nf; ++f) {
        const Quad& q = mesh.face(f);
        face_points[static_cast<std::size_t>(f)] =
            0.25 * (mesh.vertex(q[0]) + mesh.vertex(q[1]) + mesh.vertex(q[2]) + mesh.vertex(q[3]));
        out[static_cast<std::size_t>(nv + ne + f)] = face_points[static_cast<std::size_t>(f)];
    }

    for (int e = 0; e < ne; ++e) {
        const Edge& edge = mesh.edge(e);
        const Vec3 mid = 0.5 * (mesh.vertex(edge.v0) + mesh.vertex(edge.v1));
        out[static_cast<std::size_t>(nv + e)] =
            edge.is_boundary() ? mid
                               : Vec3(0.5 * mid + 0.25 * (face_points[static_cast<std::size_t>(edge.face0)] +
                                                          face_points[static_cast<std::size_t>(edge.face1)]));
    }

    // Edge and diagonal neighbour sums per vertex.
    std::vector<Vec3> edge_sum(static_cast<std::size_t>(nv), Vec3::Zero());
    std::vector<Vec3> bnd_sum(static_cast<std::size_t>(nv), Vec3::Zero());
    std::vector<int> bnd_count(static_cast<std::size_t>(nv), 0);
    for (const Edge& edge : mesh.edges()) {
        edge_sum[static_cast<std::size_t>(edge.v0)] += mesh.vertex(edge.v1);
        edge_sum[static_cast<std::size_t>(edge.v1)] += mesh.vertex(edge.v0);
        if (edge.is_boundary()) {
            bnd_sum[static_cast<std::size_t>(edge.v0)] += mesh.vertex(edge.v1);
            bnd_sum[static_cast<std::size_t>(edge.v1)] += mesh.vertex(edge.v0);
            ++bnd_count[static_cast<std::size_t>(edge.v0)];
            ++bnd_count[static_cast<std::size_t>(edge.v1)];
        }
    }
    std::vector<Vec3> diag_sum(static_cast<std::size_t>(nv), Vec3::Zero());
    for (int f = 0; f < nf; ++f) {
        const Quad& q = mesh.face(f);
        for (int c = 0; c < 4; ++c) diag_sum[static_cast<std::size_t>(q[c])] += mesh.vertex(q[(c + 2) % 4]);
    }

    for (int v = 0; v < nv; ++v) {
        const auto i = static_cast<std::size_t>(v);
        const Vec3& p = mesh.vertex(v);
        if (mesh.is_boundary_vertex(v)) {
            if (mesh.valence(v) == 1 || bnd_count[i] != 2)
                out[i] = p;
            else
                out[i] = 0.75 * p + 0.125 * bnd_sum[i];
            continue;
        }
        const double k = mesh.valence(v);
        out[i] = (1.0 - 7.0 / (4.0 * k)) * p + (3.0 / (2.0 * k * k)) * edge_sum[i] + (1.0 / (4.0 * k * k)) * diag_sum[i];
    }

    std::vector<Quad> faces;
    faces.reserve(static_cast<std::size_t>(4 * nf));
    for (int f = 0; f < nf; ++f) {
        const Quad& q = mesh.face(f);
        const int fp = nv + ne + f;
        std::array<int, 4> ep{};
        for (int c = 0; c < 4; ++c) ep[static_cast<std::size_t>(c)] = nv + mesh.face_edge(f, c);
        faces.push_back({q[0], ep[0], fp, ep[3]});
        faces.push_back({ep[0], q[1], ep[1], fp});
        faces.push_back({fp, ep[1], q[2], ep[2]});
        faces.push_back({ep[3], fp, ep[2], q[3]});
    }
    return ControlMesh(std::move(out), std::move(faces));
}

ControlMesh subdivide_mesh(const ControlMesh& mesh, int levels)
{
    if (levels < 0) throw std::invalid_argument("subdivide_mesh: negative level count");
    ControlMesh m = mesh;
    for (int i = 0; i < levels; ++i) m = subdivide_mesh(m);
    return m;
}

} // namespace subdiv_iga
