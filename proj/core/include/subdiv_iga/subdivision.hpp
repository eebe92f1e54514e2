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

#include <Eigen/Dense>

namespace subdiv_iga {

/// One refinement step of an open control polygon (one point per row).
/// Returns 2n-1 rows: end points kept, vertex points 1/8, 3/4, 1/8, edge points at midpoints.
Eigen::MatrixXd subdivide_curve(const Eigen::MatrixXd& points);

///
/// One Catmull-Clark step.
///
/// New vertex numbering: vertex points [0, nv), edge points nv + edge id, face points
/// nv + ne + face id. Face f becomes faces 4f..4f+3; child c touches corner c of f and keeps
/// the parametric orientation of f, so child c covers the quadrant of f at corner c.
/// Boundary vertices and edges follow the curve rules; valence-1 corners are kept.
///
ControlMesh subdivide_mesh(const ControlMesh& mesh);

/// Applies subdivide_mesh `levels` times.
ControlMesh subdivide_mesh(const ControlMesh& mesh, int levels);

} // namespace subdiv_iga
