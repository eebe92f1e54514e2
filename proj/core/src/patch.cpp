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
#include <subdiv_iga/patch.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace subdiv_iga {

namespace {

using GridPos = std::array<int, 2>;

std::string at_face(int f)
{
    return "face " + std::to_string(f) + ": ";
}

/// Fills a w x h window of the vertex grid by walking across edges from the element.
std::vector<int> fill_window(const ControlMesh& mesh, int face, int origin_corner,
                             const std::array<GridPos, 4>& corner_pos, int w, int h)
{
    std::vector<int> grid(static_cast<std::size_t>(w * h), -1);
    std::map<int, GridPos> placed_vertex;
    auto inside = [&](const GridPos& p) { return p[0] >= 0 && p[0] < w && p[1] >= 0 && p[1] < h; };
    auto place = [&](int v, const GridPos& p) {
        int& slot = grid[static_cast<std::size_t>(p[0] + w * p[1])];
        if (slot >= 0 && slot != v)
            throw MeshError(at_face(face) + "inconsistent patch neighbourhood");
        auto [it, inserted] = placed_vertex.emplace(v, p);
        if (!inserted && it->second != p)
            throw MeshError(at_face(face) + "vertex " + std::to_string(v) + " appears twice in the patch");
        slot = v;
    };

    struct Placed
    {
        int face;
        int corner0; // face corner placed at pos[0]
        std::array<GridPos, 4> pos;
    };
    std::vector<char> visited(static_cast<std::size_t>(mesh.num_faces()), 0);
    std::deque<Placed> queue;
    queue.push_back({face, origin_corner, corner_pos});
    visited[static_cast<std::size_t>(face)] = 1;
    while (!queue.empty()) {
        const Placed cur = queue.front();
        queue.pop_front();
        const Quad& q = mesh.face(cur.face);
        for (int i = 0; i < 4; ++i) place(q[(cur.corner0 + i) % 4], cur.pos[static_cast<std::size_t>(i)]);
        for (int i = 0; i < 4; ++i) {
            const int a = q[(cur.corner0 + i) % 4];
            const int b = q[(cur.corner0 + i + 1) % 4];
            const GridPos pa = cur.pos[static_cast<std::size_t>(i)];
            const GridPos pb = cur.pos[static_cast<std::size_t>((i + 1) % 4)];
            const auto nb = mesh.face_with_half_edge(b, a);
            if (!nb || visited[static_cast<std::size_t>(nb->face)]) continue;
            const int dx = pb[0] - pa[0], dy = pb[1] - pa[1];
            const GridPos x{pa[0] + dy, pa[1] - dx};
            const GridPos y{pb[0] + dy, pb[1] - dx};
            if (!inside(x) || !inside(y)) continue;
            visited[static_cast<std::size_t>(nb->face)] = 1;
            queue.push_back({nb->face, nb->corner, {pb, pa, x, y}});
        }
    }
    if (std::find(grid.begin(), grid.end(), -1) != grid.end())
        throw MeshError(at_face(face) + "incomplete patch neighbourhood");
    return grid;
}

bool interior_regular(const ControlMesh& mesh, int v)
{
    return !mesh.is_boundary_vertex(v) && mesh.valence(v) == 4;
}

} // namespace

std::string_view to_string(PatchType type)
{
    switch (type) {
    case PatchType::RegularInterior: return "RegularInterior";
    case PatchType::BoundaryEdge: return "BoundaryEdge";
    case PatchType::BoundaryCorner: return "BoundaryCorner";
    case PatchType::Irregular: return "Irregular";
    }
    return "?";
}

Vec2 patch_to_face(int origin_corner, const Vec2& p)
{
    switch (origin_corner & 3) {
    case 0: return p;
    case 1: return {1.0 - p.y(), p.x()};
    case 2: return {1.0 - p.x(), 1.0 - p.y()};
    default: return {p.y(), 1.0 - p.x()};
    }
}

Vec2 face_to_patch(int origin_corner, const Vec2& f)
{
    switch (origin_corner & 3) {
    case 0: return f;
    case 1: return {f.y(), 1.0 - f.x()};
    case 2: return {1.0 - f.x(), 1.0 - f.y()};
    default: return {1.0 - f.y(), f.x()};
    }
}

ElementPatch extract_regular_patch(const ControlMesh& mesh, int face, int origin_corner)
{
    ElementPatch patch;
    patch.face = face;
    patch.type = PatchType::RegularInterior;
    patch.origin_corner = origin_corner;
    patch.control_vertices = fill_window(mesh, face, origin_corner, {{{1, 1}, {2, 1}, {2, 2}, {1, 2}}}, 4, 4);
    return patch;
}

ElementPatch extract_irregular_patch(const ControlMesh& mesh, int face, int corner)
{
    const Quad& q = mesh.face(face);
    const int ev = q[corner];
    if (mesh.is_boundary_vertex(ev))
        throw MeshError(at_face(face) + "extraordinary vertex on the boundary is an unsupported configuration");
    const int k = mesh.valence(ev);
    if (k < 3) throw MeshError(at_face(face) + "valence below 3");
    for (int i = 1; i < 4; ++i)
        if (!interior_regular(mesh, q[(corner + i) % 4]))
            throw MeshError(at_face(face) + "irregular element needs interior valence-4 neighbours "
                                            "(requires one mesh refinement or is an unsupported configuration)");

    std::vector<int> cv(static_cast<std::size_t>(2 * k + 8), -1);
    cv[0] = ev;
    int f = face, c = corner;
    for (int s = 0; s < k; ++s) {
        const Quad& fq = mesh.face(f);
        if (fq[c] != ev) throw MeshError(at_face(face) + "broken fan around extraordinary vertex");
        const int e_s = fq[(c + 1) % 4];
        const int f_s = fq[(c + 2) % 4];
        const int e_next = fq[(c + 3) % 4];
        auto set = [&](std::size_t idx, int v) {
            if (cv[idx] >= 0 && cv[idx] != v) throw MeshError(at_face(face) + "broken fan around extraordinary vertex");
            cv[idx] = v;
        };
        set(static_cast<std::size_t>(1 + 2 * s), e_s);
        set(static_cast<std::size_t>(2 + 2 * s), f_s);
        set(static_cast<std::size_t>(1 + 2 * ((s + 1) % k)), e_next);
        const auto nb = mesh.face_with_half_edge(ev, e_next);
        if (!nb) throw MeshError(at_face(face) + "open fan around interior vertex");
        f = nb->face;
        c = nb->corner;
    }
    if (f != face) throw MeshError(at_face(face) + "fan around extraordinary vertex does not close");

    const auto E = [&](int s) { return cv[static_cast<std::size_t>(1 + 2 * (((s % k) + k) % k))]; };
    const auto F = [&](int s) { return cv[static_cast<std::size_t>(2 + 2 * (((s % k) + k) % k))]; };
    const int o = 2 * k + 1;

    // Returns the two far vertices of the face containing half-edge from -> to.
    auto far_pair = [&](int from, int to) {
        const auto nb = mesh.face_with_half_edge(from, to);
        if (!nb) throw MeshError(at_face(face) + "incomplete irregular patch neighbourhood");
        const Quad& g = mesh.face(nb->face);
        return std::array<int, 2>{g[(nb->corner + 2) % 4], g[(nb->corner + 3) % 4]};
    };
    auto set_outer = [&](int m, int v) {
        int& slot = cv[static_cast<std::size_t>(o + m)];
        if (slot >= 0 && slot != v) throw MeshError(at_face(face) + "inconsistent irregular patch neighbourhood");
        slot = v;
    };
    const auto g = far_pair(F(0), E(0));     // (f0, e0, o1, o2)
    set_outer(1, g[0]);
    set_outer(2, g[1]);
    const auto hh = far_pair(E(0), F(k - 1)); // (e0, f_{k-1}, o0, o1)
    set_outer(0, hh[0]);
    set_outer(1, hh[1]);
    const auto ii = far_pair(F(0), cv[static_cast<std::size_t>(o + 2)]); // (f0, o2, o3, o4)
    set_outer(3, ii[0]);
    set_outer(4, ii[1]);
    const auto jj = far_pair(E(1), F(0));    // (e1, f0, o4, o5)
    set_outer(4, jj[0]);
    set_outer(5, jj[1]);
    const auto ll = far_pair(E(1), cv[static_cast<std::size_t>(o + 5)]); // (e1, o5, o6, f1)
    set_outer(6, ll[0]);
    if (ll[1] != F(1)) throw MeshError(at_face(face) + "inconsistent irregular patch neighbourhood");

    std::vector<int> sorted = cv;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw MeshError(at_face(face) + "irregular patch has repeated control vertices (mesh too coarse)");

    ElementPatch patch;
    patch.face = face;
    patch.type = PatchType::Irregular;
    patch.control_vertices = std::move(cv);
    patch.valence = k;
    patch.origin_corner = corner;
    return patch;
}

ElementPatch classify_element(const ControlMesh& mesh, int face)
{
    const Quad& q = mesh.face(face);

    int ev_count = 0, ev_corner = -1;
    bool touches_boundary = false;
    for (int c = 0; c < 4; ++c) {
        if (mesh.is_extraordinary(q[c])) {
            ++ev_count;
            ev_corner = c;
        }
        touches_boundary = touches_boundary || mesh.is_boundary_vertex(q[c]);
    }
    if (ev_count > 1)
        throw MeshError(at_face(face) + "more than one extraordinary vertex; requires one mesh refinement");
    if (ev_count == 1) {
        if (touches_boundary)
            throw MeshError(at_face(face) + "extraordinary vertex next to the boundary is an unsupported configuration");
        return extract_irregular_patch(mesh, face, ev_corner);
    }
    if (!touches_boundary) return extract_regular_patch(mesh, face, 0);

    std::array<bool, 4> bedge{};
    int nbedge = 0;
    for (int c = 0; c < 4; ++c) {
        bedge[static_cast<std::size_t>(c)] = mesh.edge(mesh.face_edge(face, c)).is_boundary();
        nbedge += bedge[static_cast<std::size_t>(c)] ? 1 : 0;
    }
    auto unsupported = [&](const char* why) {
        return MeshError(at_face(face) + "unsupported configuration (" + why + ")");
    };

    ElementPatch patch;
    patch.face = face;
    if (nbedge == 1) {
        const int r = static_cast<int>(std::find(bedge.begin(), bedge.end(), true) - bedge.begin());
        const int a = q[r], b = q[(r + 1) % 4], c2 = q[(r + 2) % 4], d = q[(r + 3) % 4];
        if (mesh.valence(a) != 2 || mesh.valence(b) != 2)
            throw unsupported("boundary vertex valence other than 2 on a boundary edge");
        if (!interior_regular(mesh, c2) || !interior_regular(mesh, d))
            throw unsupported("boundary element with non-regular interior corners");
        patch.type = PatchType::BoundaryEdge;
        patch.origin_corner = r;
        patch.control_vertices = fill_window(mesh, face, r, {{{1, 0}, {2, 0}, {2, 1}, {1, 1}}}, 4, 3);
        return patch;
    }
    if (nbedge == 2) {
        int r = -1;
        for (int c = 0; c < 4; ++c)
            if (bedge[static_cast<std::size_t>(c)] && bedge[static_cast<std::size_t>((c + 3) % 4)]) r = c;
        if (r < 0) throw unsupported("two opposite boundary edges");
        if (mesh.valence(q[r]) != 1) throw unsupported("corner vertex valence other than 1");
        if (mesh.valence(q[(r + 1) % 4]) != 2 || mesh.valence(q[(r + 3) % 4]) != 2)
            throw unsupported("boundary vertex valence other than 2 next to a corner");
        if (!interior_regular(mesh, q[(r + 2) % 4])) throw unsupported("corner element with irregular interior corner");
        patch.type = PatchType::BoundaryCorner;
        patch.origin_corner = r;
        patch.control_vertices = fill_window(mesh, face, r, {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, 3, 3);
        return patch;
    }
    if (nbedge == 0) throw unsupported("element touches the boundary at a vertex only");
    throw unsupported("element with three or more boundary edges");
}

std::vector<ElementPatch> classify_elements(const ControlMesh& mesh)
{
    std::vector<ElementPatch> patches;
    patches.reserve(static_cast<std::size_t>(mesh.num_faces()));
    for (int f = 0; f < mesh.num_faces(); ++f) patches.push_back(classify_element(mesh, f));
    return patches;
}

} // namespace subdiv_iga
