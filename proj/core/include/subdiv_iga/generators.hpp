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

#include <subdiv_iga/fitting.hpp>
#include <subdiv_iga/mesh.hpp>

namespace subdiv_iga {

/// n x n quad grid on [0,size]^2 in the x3 = 0 plane.
ControlMesh plate_mesh1(int n = 4, double size = 2.0);

///
/// Plate [0,size]^2 with interior extraordinary vertices: the square is split along the
/// line from (size/2, 0) to (0, size/2) into a triangle and a pentagon, each cut into quads
/// around its centre (valence 3 and 5), then subdivided once so that no element touches
/// both an extraordinary vertex and the boundary. 32 faces.
///
ControlMesh plate_mesh2(double size = 2.0);

/// Open cylinder of the given radius around coordinate axis `axis` (0, 1 or 2),
/// spanning [z0, z0 + length] along it.
struct CylinderGeometry
{
    double radius = 1.0;
    double length = 2.0;
    double z0 = 0.0;
    int axis = 2;

    /// Maps cylinder-local (x, y, z) with z along the axis to global coordinates (cyclic shift).
    Vec3 to_global(const Vec3& local) const;
    Vec3 to_local(const Vec3& global) const;
};

/// Periodic n_theta x n_z grid with vertices on the cylinder (not fitted).
ControlMesh cylinder_grid(int n_theta, int n_z, const CylinderGeometry& geometry);

/// Cylinder grid with one edge rotation: two valence-3 and two valence-5 vertices,
/// subdivided once. 260 faces.
ControlMesh cylinder_4ev_mesh(const CylinderGeometry& geometry);

/// Cylinder grid with two edge rotations sharing a vertex: one valence-6, two valence-5
/// and four valence-3 vertices, subdivided once. 264 faces.
ControlMesh cylinder_7ev_mesh(const CylinderGeometry& geometry);

/// Upper half of a cube-sphere: 4x4 cap plus four 4x4 side strips, 80 faces, vertices on
/// the sphere, four valence-3 vertices.
ControlMesh hemisphere_mesh(double radius = 1.0);

SurfaceProjector cylinder_projector(const CylinderGeometry& geometry);
SurfaceProjector sphere_projector(double radius = 1.0);

} // namespace subdiv_iga
