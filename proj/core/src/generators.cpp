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
#include <subdiv_iga/generators.hpp>

#include <subdiv_iga/subdivision.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace subdiv_iga {

namespace {

/// Splits a convex polygon into quads around its centre vertex.
void quads_around_centre(const std::vector<int>& polygon, int centre, std::map<std::pair<int, int>, int>& midpoints,
                         std::vector<Vec3>& verts, std::vector<Quad>& faces)
{
    auto mid = [&](int a, int b) {
        const auto key = std::minmax(a, b);
        auto it = midpoints.find(key);
        if (it != midpoints.end()) return it->second;
        verts.push_back(0.5 * (verts[static_cast<std::size_t>(a)] + verts[static_cast<std::size_t>(b)]));
        const int id = static_cast<int>(verts.size()) - 1;
        midpoints.emplace(key, id);
        return id;
    };
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int v = polygon[i];
        const int next = polygon[(i + 1) % n];
        const int prev = polygon[(i + n - 1) % n];
        faces.push_back({v, mid(v, next), centre, mid(prev, v)});
    }
}

struct CylinderBuilder
{
    int nt;
    int nz;
    CylinderGeometry g;
    std::vector<Vec3> verts;
    std::vector<Quad> faces;

    int V(int i, int j) const { return ((i % nt) + nt) % nt + nt * j; }
    int cell(int i, int j) const { return ((i % nt) + nt) % nt + nt * j; }

    void build()
    {
        if (nt < 5 || nz < 2) throw std::invalid_argument("cylinder grid needs n_theta >= 5 and n_z >= 2");
        for (int j = 0; j <= nz; ++j)
            for (int i = 0; i < nt; ++i) {
                const double th = 2.0 * std::numbers::pi * i / nt;
                verts.push_back(g.to_global(Vec3(g.radius * std::cos(th), g.radius * std::sin(th), g.z0 + g.length * j / nz)));
            }
        for (int j = 0; j < nz; ++j)
            for (int i = 0; i < nt; ++i) faces.push_back({V(i, j), V(i + 1, j), V(i + 1, j + 1), V(i, j + 1)});
    }

    /// Replaces the shared edge of cells (i,j) and (i+1,j) by a diagonal of their union.
    /// from_right: diagonal (i+2,j)-(i,j+1); otherwise (i,j)-(i+2,j+1).
    void rotate(int i, int j, bool from_right)
    {
        const int a = V(i, j), b = V(i + 1, j), c = V(i + 2, j);
        const int d = V(i + 2, j + 1), e = V(i + 1, j + 1), f = V(i, j + 1);
        auto& q0 = faces[static_cast<std::size_t>(cell(i, j))];
        auto& q1 = faces[static_cast<std::size_t>(cell(i + 1, j))];
        if (from_right) {
            q0 = {a, b, c, f};
            q1 = {c, d, e, f};
        } else {
            q0 = {a, b, c, d};
            q1 = {d, e, f, a};
        }
        // Pull the two straight-angle vertices apart so that both quads stay convex.
        const Vec3 dz = g.to_global(Vec3(0.0, 0.0, 0.3 * g.length / nz));
        verts[static_cast<std::size_t>(b)] -= dz;
        verts[static_cast<std::size_t>(e)] += dz;
    }

    ControlMesh finish() const
    {
        const ControlMesh coarse(verts, faces);
        const ControlMesh fine = subdivide_mesh(coarse);
        const SurfaceProjector proj = cylinder_projector(g);
        std::vector<Vec3> v = fine.vertices();
        for (Vec3& p : v) p = proj(p);
        return fine.with_vertices(std::move(v));
    }
};

} // namespace

Vec3 CylinderGeometry::to_global(const Vec3& l) const
{
    switch (axis) {
    case 0: return {l.z(), l.x(), l.y()};
    case 1: return {l.y(), l.z(), l.x()};
    case 2: return l;
    }
    throw std::invalid_argument("cylinder axis must be 0, 1 or 2");
}

Vec3 CylinderGeometry::to_local(const Vec3& g) const
{
    switch (axis) {
    case 0: return {g.y(), g.z(), g.x()};
    case 1: return {g.z(), g.x(), g.y()};
    case 2: return g;
    }
    throw std::invalid_argument("cylinder axis must be 0, 1 or 2");
}

ControlMesh plate_mesh1(int n, double size)
{
    if (n < 2) throw std::invalid_argument("plate_mesh1: resolution must be at least 2");
    std::vector<Vec3> verts;
    std::vector<Quad> faces;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) verts.emplace_back(size * i / n, size * j / n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int v = i + (n + 1) * j;
            faces.push_back({v, v + 1, v + n + 2, v + n + 1});
        }
    return ControlMesh(std::move(verts), std::move(faces));
}

ControlMesh plate_mesh2(double size)
{
    const double h = 0.5 * size;
    std::vector<Vec3> verts = {
        {0, 0, 0}, {2 * h, 0, 0}, {2 * h, 2 * h, 0}, {0, 2 * h, 0}, // A B C D
        {h, 0, 0},  {0, h, 0},                                      // P Q
        {h / 3, h / 3, 0},                                          // centroid of A, P, Q
        {h, h, 0},                                                  // pentagon centre
    };
    std::map<std::pair<int, int>, int> mids;
    std::vector<Quad> faces;
    quads_around_centre({0, 4, 5}, 6, mids, verts, faces);
    quads_around_centre({4, 1, 2, 3, 5}, 7, mids, verts, faces);
    return subdivide_mesh(ControlMesh(std::move(verts), std::move(faces)));
}

ControlMesh cylinder_grid(int n_theta, int n_z, const CylinderGeometry& geometry)
{
    CylinderBuilder b{n_theta, n_z, geometry, {}, {}};
    b.build();
    return ControlMesh(b.verts, b.faces);
}

ControlMesh cylinder_4ev_mesh(const CylinderGeometry& geometry)
{
    CylinderBuilder b{13, 5, geometry, {}, {}};
    b.build();
    b.rotate(5, 2, true);
    return b.finish();
}

ControlMesh cylinder_7ev_mesh(const CylinderGeometry& geometry)
{
    CylinderBuilder b{11, 6, geometry, {}, {}};
    b.build();
    b.rotate(3, 2, true);
    b.rotate(5, 2, false);
    return b.finish();
}

ControlMesh hemisphere_mesh(double radius)
{
    std::vector<Vec3> verts;
    std::map<std::array<int, 3>, int> index; // coordinates in quarter units
    auto vid = [&](int x, int y, int z) {
        const std::array<int, 3> key{x, y, z};
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        verts.emplace_back(x / 4.0, y / 4.0, z / 4.0);
        index.emplace(key, static_cast<int>(verts.size()) - 1);
        return static_cast<int>(verts.size()) - 1;
    };
    std::vector<Quad> faces;
    // Cap z = 1, outward normal +z.
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const int x = -4 + 2 * i, y = -4 + 2 * j;
            faces.push_back({vid(x, y, 4), vid(x + 2, y, 4), vid(x + 2, y + 2, 4), vid(x, y + 2, 4)});
        }
    // Perimeter of the cap, counter-clockwise seen from above.
    std::vector<std::array<int, 2>> ring;
    for (int s = 0; s < 4; ++s) ring.push_back({4, -4 + 2 * s});
    for (int s = 0; s < 4; ++s) ring.push_back({4 - 2 * s, 4});
    for (int s = 0; s < 4; ++s) ring.push_back({-4, 4 - 2 * s});
    for (int s = 0; s < 4; ++s) ring.push_back({-4 + 2 * s, -4});
    for (int k = 0; k < 4; ++k)
        for (std::size_t s = 0; s < ring.size(); ++s) {
            const auto p = ring[s], q = ring[(s + 1) % ring.size()];
            faces.push_back({vid(p[0], p[1], k), vid(q[0], q[1], k), vid(q[0], q[1], k + 1), vid(p[0], p[1], k + 1)});
        }
    for (Vec3& v : verts) v = radius * v.normalized();
    return ControlMesh(std::move(verts), std::move(faces));
}

SurfaceProjector cylinder_projector(const CylinderGeometry& geometry)
{
    if (geometry.axis < 0 || geometry.axis > 2) throw std::invalid_argument("cylinder axis must be 0, 1 or 2");
    return [geometry](const Vec3& p) {
        const Vec3 l = geometry.to_local(p);
        const double r = std::hypot(l.x(), l.y());
        if (r == 0.0) return geometry.to_global(Vec3(geometry.radius, 0.0, l.z()));
        return geometry.to_global(Vec3(geometry.radius * l.x() / r, geometry.radius * l.y() / r, l.z()));
    };
}

SurfaceProjector sphere_projector(double radius)
{
    return [radius](const Vec3& p) {
        const double r = p.norm();
        return r == 0.0 ? Vec3(0.0, 0.0, radius) : Vec3(radius * p / r);
    };
}

} // namespace subdiv_iga
