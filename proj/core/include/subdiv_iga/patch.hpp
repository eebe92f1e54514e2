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

#include <subdiv_iga/mesh.hpp>

#include <string_view>
#include <vector>

namespace subdiv_iga {

enum class PatchType
{
    RegularInterior,
    BoundaryEdge,
    BoundaryCorner,
    Irregular,
};

std::string_view to_string(PatchType type);

///
/// One element (face) and the control vertices that influence its limit surface.
///
/// Control vertex orderings, with the element spanning (xi, eta) in [0,1]^2 and
/// grid position (i, j) meaning i steps along xi and j along eta:
///
/// - RegularInterior: 4x4 grid, index i + 4j, element corners at (1,1),(2,1),(2,2),(1,2).
/// - BoundaryEdge: 4x3 grid, index i + 4j, boundary row j = 0 (eta = 0 on the boundary),
///   element corners at (1,0),(2,0),(2,1),(1,1).
/// - BoundaryCorner: 3x3 grid, index i + 3j, corner vertex at (0,0).
/// - Irregular: 2k+8 vertices. 0 is the extraordinary vertex at the element origin.
///   Around it, 1 + 2s is the edge neighbour and 2 + 2s the face-diagonal of sector s,
///   sector s being the face (0, 1+2s, 2+2s, 3+2s) taken counter-clockwise with sector 0
///   the element itself. The remaining seven vertices 2k+1..2k+7 sit at grid positions
///   (2,-1),(2,0),(2,1),(2,2),(1,2),(0,2),(-1,2) relative to the element
///   (extraordinary vertex at (0,0), vertex 1 at (1,0), vertex 3 at (0,1)).
///
struct ElementPatch
{
    int face = -1;
    PatchType type = PatchType::RegularInterior;
    std::vector<int> control_vertices;
    /// Valence of the extraordinary vertex (Irregular), 4 otherwise.
    int valence = 4;
    /// Face corner that sits at the patch parametric origin.
    int origin_corner = 0;

    int size() const { return static_cast<int>(control_vertices.size()); }
};

/// Classifies every face. Throws MeshError for unsupported configurations.
std::vector<ElementPatch> classify_elements(const ControlMesh& mesh);

/// Classifies a single face.
ElementPatch classify_element(const ControlMesh& mesh, int face);

/// Builds the Irregular-ordered patch around face corner `corner`, whose vertex must be
/// interior. The other three corners must be interior with valence 4. A valence-4 origin
/// is accepted, which gives an ordinary patch in the irregular layout.
ElementPatch extract_irregular_patch(const ControlMesh& mesh, int face, int corner);

/// Builds the 4x4 regular window for a face whose corners are interior and valence 4.
ElementPatch extract_regular_patch(const ControlMesh& mesh, int face, int origin_corner = 0);

/// Converts patch parameters to the face's own parameters (corner 0 at (0,0), corner 1 at (1,0)).
Vec2 patch_to_face(int origin_corner, const Vec2& patch_uv);
Vec2 face_to_patch(int origin_corner, const Vec2& face_uv);

} // namespace subdiv_iga
